#include <gtest/gtest.h>

#include <cmath>

#include "cpint/polynomial.hpp"
#include "cpint/roots.hpp"

using cpint::Polynomial;

namespace {

double naive(const Polynomial& p, double t) {
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) s += p[k] * std::pow(t, static_cast<double>(k));
    return s;
}

} // namespace

TEST(Polynomial, EvaluatesLikePowerSum) {
    const Polynomial p({1.5, -2.0, 0.25, 3.0});
    for (double t : {-2.0, -0.3, 0.0, 0.7, 1.9}) EXPECT_NEAR(p(t), naive(p, t), 1e-13);
}

TEST(Polynomial, DegreeIgnoresTrailingZeros) {
    EXPECT_EQ(Polynomial({1.0, 2.0, 0.0, 0.0}).degree(), 1);
    EXPECT_EQ(Polynomial({0.0}).degree(), -1);
    EXPECT_TRUE(Polynomial().is_zero());
    EXPECT_EQ(Polynomial({1.0, 2.0, 0.0}), Polynomial({1.0, 2.0}));
}

TEST(Polynomial, DerivativeAndAntiderivativeAreInverse) {
    const Polynomial p({0.5, -1.0, 2.0, 4.0});
    EXPECT_EQ(p.derivative(), Polynomial({-1.0, 4.0, 12.0}));
    EXPECT_EQ(p.derivative(2), Polynomial({4.0, 24.0}));
    EXPECT_EQ(p.antiderivative().derivative(), p);
    EXPECT_EQ(p.antiderivative()(0.0), 0.0);
}

TEST(Polynomial, IntegrateMatchesClosedForm) {
    // int_0^2 (1 + x^2) = 2 + 8/3
    EXPECT_NEAR(Polynomial({1.0, 0.0, 1.0}).integrate(0.0, 2.0), 2.0 + 8.0 / 3.0, 1e-14);
}

TEST(Polynomial, ShiftedIsTaylorShift) {
    const Polynomial p({1.0, -3.0, 0.5, 2.0});
    const auto q = p.shifted(0.75);
    for (double t : {-1.0, 0.0, 0.4, 2.0}) EXPECT_NEAR(q(t), p(t + 0.75), 1e-12);
}

TEST(Polynomial, ComposeLinear) {
    const Polynomial p({2.0, 1.0, -1.0});
    const auto q = p.compose_linear(0.5, -2.0);
    for (double t : {-1.0, 0.3, 1.2}) EXPECT_NEAR(q(t), p(0.5 - 2.0 * t), 1e-13);
}

TEST(Polynomial, ArithmeticOperators) {
    const Polynomial p({1.0, 1.0}), q({-1.0, 1.0});
    EXPECT_EQ(p * q, Polynomial({-1.0, 0.0, 1.0}));
    EXPECT_EQ(p + q, Polynomial({0.0, 2.0}));
    EXPECT_EQ(p - q, Polynomial({2.0}));
    EXPECT_EQ(p * 3.0, Polynomial({3.0, 3.0}));
}

TEST(Roots, QuadraticAndCubic) {
    // (t - 0.25)(t - 0.5)(t - 2)
    const Polynomial p = Polynomial({-0.25, 1.0}) * Polynomial({-0.5, 1.0}) * Polynomial({-2.0, 1.0});
    const auto r = cpint::real_roots(p, 0.0, 1.0);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(r[0], 0.25, 1e-13);
    EXPECT_NEAR(r[1], 0.5, 1e-13);
    EXPECT_TRUE(cpint::real_roots(Polynomial({1.0, 0.0, 1.0}), -5.0, 5.0).empty());
}

TEST(Roots, HighDegreeBySubdivision) {
    // Quintic with roots 0.1, 0.3, 0.6, 0.9 (double root excluded: simple roots only) and -1.
    Polynomial p({1.0});
    for (double r : {0.1, 0.3, 0.6, 0.9, -1.0}) p = p * Polynomial({-r, 1.0});
    const auto r = cpint::real_roots(p, 0.0, 1.0);
    ASSERT_EQ(r.size(), 4u);
    const double expect[] = {0.1, 0.3, 0.6, 0.9};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(r[i], expect[i], 1e-12);
}

TEST(Roots, CriticalPointsIncludeEnds) {
    const auto c = cpint::critical_points(Polynomial({0.0, 0.0, 1.0}), -1.0, 2.0);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c.front(), -1.0);
    EXPECT_NEAR(c[1], 0.0, 1e-15);
    EXPECT_EQ(c.back(), 2.0);
}
