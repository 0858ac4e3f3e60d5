#include <gtest/gtest.h>

#include "cpint/piecewise.hpp"

using cpint::InputError;
using cpint::PiecewisePolynomial;
using cpint::Polynomial;

namespace {

// 0 / x / 2 - x / 0 on the knots 0, 1, 2.
PiecewisePolynomial tent() {
    return PiecewisePolynomial({0.0, 1.0, 2.0}, {Polynomial({0.0, 1.0}), Polynomial({1.0, -1.0})}, 0.0, 0.0);
}

} // namespace

TEST(Piecewise, RejectsInvalidInput) {
    EXPECT_THROW(PiecewisePolynomial({}, {}, 0.0, 0.0), InputError);
    EXPECT_THROW(PiecewisePolynomial({1.0, 0.0}, {Polynomial({1.0})}, 0.0, 0.0), InputError);
    EXPECT_THROW(PiecewisePolynomial({0.0, 1.0}, {}, 0.0, 0.0), InputError);
    EXPECT_THROW(PiecewisePolynomial({0.0, 1.0}, {Polynomial({NAN})}, 0.0, 0.0), InputError);
    EXPECT_THROW(PiecewisePolynomial({0.0}, {}, INFINITY, 0.0), InputError);
}

TEST(Piecewise, EvaluationIsRightContinuousWithTails) {
    const PiecewisePolynomial p({0.0, 1.0}, {Polynomial({2.0})}, -1.0, 5.0);
    EXPECT_EQ(p(-0.5), -1.0);
    EXPECT_EQ(p(0.0), 2.0);
    EXPECT_EQ(p(0.5), 2.0);
    EXPECT_EQ(p(1.0), 5.0);
    EXPECT_EQ(p.left_value(1.0), 2.0);
    EXPECT_EQ(p.left_limit(0), -1.0);
    EXPECT_EQ(p.right_limit(1), 5.0);
    EXPECT_EQ(p.at(cpint::ExtendedReal::neg_inf()), -1.0);
    EXPECT_EQ(p.at(cpint::ExtendedReal::pos_inf()), 5.0);
}

TEST(Piecewise, RangeAndSup) {
    const auto [lo, hi] = tent().range();
    EXPECT_EQ(lo, 0.0);
    EXPECT_EQ(hi, 1.0);
    const PiecewisePolynomial bump({0.0, 2.0}, {Polynomial({0.0, 2.0, -1.0})}, 0.0, 0.0);
    EXPECT_NEAR(bump.sup_abs(), 1.0, 1e-15);
}

TEST(Piecewise, RefineKeepsValues) {
    const auto t = tent();
    const auto r = t.refined({-1.0, 0.0, 0.5, 1.0, 1.25, 2.0, 3.0});
    for (double x : {-2.0, -0.5, 0.2, 0.5, 0.9, 1.1, 1.3, 1.9, 2.5, 4.0}) EXPECT_NEAR(r(x), t(x), 1e-15);
}

TEST(Piecewise, TranslateDilateReflect) {
    const auto t = tent();
    for (double x : {-0.5, 0.3, 1.2, 2.9, 4.5}) {
        EXPECT_DOUBLE_EQ(t.translated(2.0)(x), t(x - 2.0));
        EXPECT_NEAR(t.dilated(0.5)(x), t(x / 0.5), 1e-15);
        EXPECT_NEAR(t.reflected()(-x), t.left_value(x), 1e-15);
    }
}

TEST(Piecewise, CalculusOperations) {
    const auto t = tent();
    EXPECT_NEAR(t.total_integral(), 1.0, 1e-15);
    EXPECT_NEAR(t.integral(0.5, 1.5), 0.75, 1e-15);
    const auto a = t.antiderivative();
    EXPECT_NEAR(a.right_tail(), 1.0, 1e-15);
    EXPECT_NEAR(a(1.0), 0.5, 1e-15);
    const auto d = t.derivative();
    EXPECT_EQ(d(0.5), 1.0);
    EXPECT_EQ(d(1.5), -1.0);
    EXPECT_THROW(PiecewisePolynomial::constant(1.0).antiderivative(), InputError);
}

TEST(Piecewise, JumpsAndCombinations) {
    const PiecewisePolynomial step({0.0}, {}, 0.0, 1.0);
    EXPECT_EQ(step.max_jump(0), 1.0);
    EXPECT_EQ(tent().max_jump(0), 0.0);
    EXPECT_EQ(tent().max_jump(1), 2.0);
    const auto s = cpint::linear_combination(2.0, tent(), -1.0, step);
    EXPECT_EQ(s(0.5), 0.0);
    EXPECT_EQ(s(-1.0), 0.0);
    EXPECT_EQ(s(3.0), -1.0);
}

TEST(Piecewise, ProductAndAbsIntegrals) {
    EXPECT_NEAR(cpint::integral_of_product(tent(), tent()), 2.0 / 3.0, 1e-15);
    const PiecewisePolynomial sign({-1.0, 0.0, 1.0}, {Polynomial({-1.0}), Polynomial({1.0})}, 0.0, 0.0);
    EXPECT_NEAR(cpint::integral_of_abs(sign), 2.0, 1e-15);
    const PiecewisePolynomial line({-1.0, 1.0}, {Polynomial({-1.0, 1.0})}, 0.0, 0.0); // x on [-1, 1]
    EXPECT_NEAR(cpint::integral_of_abs(line), 1.0, 1e-15);
    EXPECT_THROW(cpint::integral_of_product(PiecewisePolynomial::constant(1.0), PiecewisePolynomial::constant(1.0)),
                 InputError);
}

TEST(ExtendedReal, ParsesLiterals) {
    using cpint::ExtendedReal;
    EXPECT_EQ(ExtendedReal::parse("-inf").kind(), ExtendedReal::Kind::NegInf);
    EXPECT_EQ(ExtendedReal::parse("inf").kind(), ExtendedReal::Kind::PosInf);
    EXPECT_EQ(ExtendedReal::parse("2.5").value(), 2.5);
    EXPECT_THROW(ExtendedReal::parse("abc"), InputError);
    EXPECT_THROW(ExtendedReal::parse("1e999"), InputError);
}
