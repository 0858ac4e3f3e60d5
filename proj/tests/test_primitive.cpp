#include <gtest/gtest.h>

#include "support.hpp"

using namespace cpint;
using namespace fixtures;

TEST(MakeDistribution, AcceptsValidPrimitives) {
    const auto zero = make_distribution(PiecewisePolynomial::constant(0.0));
    EXPECT_EQ(alexiewicz_norm(zero), 0.0);
    const auto f = ramp();
    EXPECT_EQ(f.primitive()(0.5), 0.5);
    // f = F' is chi_(0,1) piecewise.
    EXPECT_EQ(f.density()(0.5), 1.0);
    EXPECT_EQ(f.density()(1.5), 0.0);
}

TEST(MakeDistribution, RejectsInvalidPrimitives) {
    EXPECT_THROW(make_distribution(PiecewisePolynomial({0.0, 1.0}, {Polynomial({0.5, 1.0})}, 0.5, 1.5)), InputError);
    EXPECT_THROW(make_distribution(PiecewisePolynomial({0.0, 1.0}, {Polynomial({0.0, 1.0})}, 0.0, 2.0)), InputError);
    EXPECT_THROW(make_distribution(PiecewisePolynomial({0.0, 1.0}, {Polynomial({0.1, 1.0})}, 0.0, 1.1)), InputError);
}

TEST(Integral, Examples) {
    EXPECT_EQ(integral(ramp(), 0.0, 1.0), 1.0);
    EXPECT_EQ(integral(tent(), ExtendedReal::neg_inf(), ExtendedReal::pos_inf()), 0.0);
    EXPECT_EQ(integral(tent(), 0.7, 0.7), 0.0);
    EXPECT_EQ(integral(ramp(), 1.0, 0.0), -1.0);
    EXPECT_EQ(integral(ramp()), 1.0);
}

TEST(AlexiewiczNorm, MatchesEndpointPairOracle) {
    EXPECT_EQ(alexiewicz_norm(tent()), 1.0);
    EXPECT_NEAR(harness::oracle_alexiewicz(tent().primitive().rep()), 1.0, 1e-15);
    EXPECT_EQ(alexiewicz_norm(zero_distribution()), 0.0);
    EXPECT_EQ(alexiewicz_norm(ramp()), 1.0);
    EXPECT_NEAR(harness::oracle_alexiewicz(ramp().primitive().rep()), 1.0, 1e-15);
}

TEST(AlexiewiczNormPrime, Examples) {
    EXPECT_EQ(alexiewicz_norm_prime(tent()), 1.0);
    EXPECT_NEAR(harness::oracle_alexiewicz_prime(tent().primitive().rep()), 1.0, 1e-15);
    EXPECT_EQ(alexiewicz_norm_prime(zero_distribution()), 0.0);
    EXPECT_EQ(alexiewicz_norm_prime(dip()), 1.0);
    EXPECT_NEAR(harness::oracle_alexiewicz_prime(dip().primitive().rep()), 1.0, 1e-15);
    EXPECT_EQ(alexiewicz_norm(dip()), 1.0);
    EXPECT_NEAR(harness::oracle_alexiewicz(dip().primitive().rep()), 1.0, 1e-15);
}

TEST(AlexiewiczNorm, InteriorExtremumOfCubic) {
    // F = 3x^2 - 2x^3 on [0, 1], then 1 - (x-1) ... back to 0 on [1, 2]: max at x = 1.
    // Use F(x) = x(1-x)(x+1) on [0,1] whose maximum is at 1/sqrt(3).
    const auto f = make_distribution(PiecewisePolynomial({0.0, 1.0}, {Polynomial({0.0, 1.0, 0.0, -1.0})}, 0.0, 0.0));
    const double peak = 2.0 / (3.0 * std::sqrt(3.0));
    EXPECT_NEAR(alexiewicz_norm(f), peak, 1e-15);
    EXPECT_NEAR(harness::oracle_alexiewicz(f.primitive().rep()), peak, 1e-12);
}

TEST(Translate, Examples) {
    EXPECT_EQ(translate(tent(), 0.0).primitive(), tent().primitive());
    const auto r = translate(ramp(), 1.0);
    EXPECT_EQ(r.primitive()(1.0), 0.0);
    EXPECT_EQ(r.primitive()(1.5), 0.5);
    EXPECT_EQ(r.primitive()(2.0), 1.0);
    const auto t5 = translate(tent(), 5.0);
    EXPECT_NEAR(harness::oracle_alexiewicz(t5.primitive().rep()), 1.0, 1e-15);
    EXPECT_EQ(alexiewicz_norm(t5), 1.0);
    EXPECT_THROW(translate(tent(), INFINITY), InputError);
}

TEST(LinearCombine, Examples) {
    const auto f = tent();
    EXPECT_EQ(alexiewicz_norm(linear_combine(1.0, f, -1.0, f)), 0.0);
    const auto two_ramp = linear_combine(2.0, ramp(), 0.0, tent());
    for (double x : {-1.0, 0.25, 0.5, 1.0, 3.0}) EXPECT_EQ(two_ramp.primitive()(x), 2.0 * ramp().primitive()(x));
    EXPECT_TRUE(approx_equal(f + f - f, f));
}

TEST(Pairing, ZeroAndPlateau) {
    const PiecewisePolynomial plateau_rep = bspline_plateau(-0.5, 0.125, 13, 1.0 / (6.0 * 0.125 * 0.125 * 0.125));
    const TestFunction phi(plateau_rep, 1e-12);
    EXPECT_EQ(pairing(zero_distribution(), phi), 0.0);
    // phi = 1 on [-0.125, 1.125]: the pairing is the integral of phi over (0, 1).
    const double oracle = quad([&](double x) { return plateau_rep(x); }, {0.0, 1.0});
    EXPECT_NEAR(oracle, 1.0, 1e-12);
    EXPECT_NEAR(pairing(ramp(), phi), oracle, 1e-12);
}

TEST(Pairing, MatchesQuadratureOfFTimesPhiPrime) {
    harness::Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto f = harness::random_distribution(rng);
        const auto phi = harness::random_test_function(rng);
        const auto& F = f.primitive().rep();
        const auto dphi = phi.rep().derivative();
        const double oracle = -quad([&](double x) { return F(x) * dphi(x); },
                                    merge_grids(F.breakpoints(), phi.rep().breakpoints()));
        EXPECT_NEAR(pairing(f, phi), oracle, 1e-11);
    }
}

TEST(TestFunction, ValidatesSmoothness) {
    EXPECT_THROW(TestFunction(PiecewisePolynomial({0.0, 1.0}, {Polynomial({1.0})}, 0.0, 0.0)), InputError);
    EXPECT_THROW(TestFunction(PiecewisePolynomial::constant(1.0)), InputError);
    // A tent is continuous but not C^1.
    EXPECT_THROW(TestFunction(harness::tent_kernel().rep()), InputError);
    EXPECT_NO_THROW(TestFunction(bspline_plateau(0.0, 0.5, 1, 1.0)));
}

TEST(ApproximateByL1, Examples) {
    EXPECT_EQ(approximate_by_l1(tent(), 0.1).primitive(), tent().primitive());
    EXPECT_EQ(alexiewicz_norm(approximate_by_l1(zero_distribution(), 0.5)), 0.0);
    EXPECT_THROW(approximate_by_l1(tent(), 0.0), InputError);

    // Zig-zag of total height 1 with 8 teeth.
    std::vector<double> x;
    std::vector<Polynomial> pieces;
    for (int k = 0; k <= 16; ++k) x.push_back(k / 16.0);
    for (int k = 0; k < 16; ++k) pieces.push_back(Polynomial({k % 2 == 0 ? 0.0 : 1.0, k % 2 == 0 ? 16.0 : -16.0}));
    const auto zig = make_distribution(PiecewisePolynomial(x, pieces, 0.0, 0.0));
    const auto smooth = make_distribution(
        PiecewisePolynomial({0.0, 1.0}, {Polynomial({0.0, 0.0, 3.0, -2.0})}, 0.0, 1.0)); // 3x^2 - 2x^3
    for (const auto& f : {zig, smooth}) {
        const auto fn = approximate_by_l1(f, 0.1);
        EXPECT_LE(fn.primitive().rep().degree(), 1);
        EXPECT_LT(harness::oracle_alexiewicz((fn - f).primitive().rep()), 0.3);
    }
}
