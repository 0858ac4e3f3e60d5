#include <gtest/gtest.h>

#include "support.hpp"

#include "cpint/stieltjes.hpp"

using namespace cpint;
using namespace fixtures;

TEST(HsIntegral, AtomExamples) {
    EXPECT_EQ(hs_integral(ramp().primitive(), BVFunction::open_step()), 0.0);
    // Tent shifted so that F(0) = 1.
    const auto shifted = translate(tent(), -1.0);
    EXPECT_EQ(shifted.primitive()(0.0), 1.0);
    EXPECT_EQ(hs_integral(shifted.primitive(), BVFunction::open_step()), 1.0);
    EXPECT_EQ(hs_integral(ramp().primitive(), BVFunction::point_indicator()), 0.0);
}

TEST(HsIntegral, MatchesRiemannStieltjesSums) {
    harness::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto F = harness::random_primitive(rng);
        const auto g = harness::random_bv(rng);
        EXPECT_NEAR(hs_integral(F, g), harness::oracle_stieltjes(F, g), 1e-8);
    }
}

TEST(IntegrateProduct, Examples) {
    harness::Rng rng(6);
    const auto f = harness::random_distribution(rng);
    EXPECT_EQ(integrate_product(f, BVFunction::constant(1.0)), integral(f));
    EXPECT_EQ(integrate_product(f, BVFunction::point_indicator()), 0.0);
    EXPECT_EQ(integrate_product(ramp(), BVFunction::open_step()), 1.0);
    // Quadrature oracle: integral over (0, 1) of 1 * 1.
    EXPECT_NEAR(quad([](double) { return 1.0; }, {0.0, 1.0}), 1.0, 1e-15);
}

TEST(IntegrateProduct, MatchesQuadratureForSmoothG) {
    harness::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto f = harness::random_distribution(rng);
        const auto g = harness::random_continuous_bv(rng);
        const auto dF = f.primitive().rep().derivative();
        const double oracle =
            quad([&](double x) { return dF(x) * g(x); }, merge_grids(dF.breakpoints(), g.breakpoints()));
        EXPECT_NEAR(integrate_product(f, g), oracle, 1e-10);
    }
}

TEST(IntegrateProduct, GammaIndependent) {
    harness::Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        const auto f = harness::random_distribution(rng);
        const auto g = harness::random_bv(rng);
        EXPECT_EQ(integrate_product(f, g, 0.0), integrate_product(f, g, 1.0));
        EXPECT_EQ(integrate_product(f, g, 0.5), integrate_product(f, g, 1.0));
    }
}

TEST(HolderCheck, Examples) {
    const auto t = holder_check(tent(), BVFunction::constant(1.0));
    EXPECT_EQ(t.lhs, 0.0);
    EXPECT_EQ(t.bound_tight, 0.0);
    EXPECT_EQ(t.bound_norm, 1.0);
    const auto r = holder_check(ramp(), BVFunction::open_step());
    EXPECT_EQ(r.lhs, 1.0);
    EXPECT_EQ(r.bound_tight, 1.0);
    EXPECT_EQ(r.bound_norm, 1.0);
}

TEST(InfAbs, Examples) {
    EXPECT_EQ(inf_abs(BVFunction::constant(1.0)), 1.0);
    EXPECT_EQ(inf_abs(BVFunction::open_step()), 0.0);
    const BVFunction r(PiecewisePolynomial({0.0, 1.0}, {Polynomial({1.0, 1.0})}, 1.0, 2.0));
    double grid_min = 1e300;
    for (int k = -100; k <= 200; ++k) grid_min = std::min(grid_min, std::abs(r(k / 100.0)));
    EXPECT_EQ(inf_abs(r), 1.0);
    EXPECT_EQ(grid_min, 1.0);
    // Point values count.
    EXPECT_EQ(inf_abs(BVFunction(PiecewisePolynomial::constant(2.0), {{0.0, -0.5}})), 0.5);
    // A sign change inside a piece gives zero.
    EXPECT_EQ(inf_abs(BVFunction(PiecewisePolynomial({0.0, 1.0}, {Polynomial({-1.0, 2.0})}, -1.0, 1.0))), 0.0);
}
