#pragma once

// Fixtures shared by the unit tests.

#include <vector>

#include "cpint/harness/oracles.hpp"
#include "cpint/harness/random.hpp"
#include "cpint/primitive.hpp"

namespace fixtures {

using namespace cpint;

inline Distribution ramp() { return harness::ramp_distribution(); }
inline Distribution tent() { return harness::tent_distribution(); }

/// F_dip: 0 / -x / x - 2 / 0 on the knots 0, 1, 2.
inline Distribution dip() {
    return make_distribution(
        PiecewisePolynomial({0.0, 1.0, 2.0}, {Polynomial({0.0, -1.0}), Polynomial({-1.0, 1.0})}, 0.0, 0.0));
}

/// Sum of `count` uniform cubic B-splines of knot spacing h starting at `start`,
/// each weighted by `weight`: C^2 with compact support, and equal to 6 h^3 weight
/// on [start + 3h, start + count h].
inline PiecewisePolynomial bspline_plateau(double start, double h, int count, double weight) {
    const auto seg = harness::detail::bspline_segments(h);
    std::vector<double> x;
    std::vector<Polynomial> pieces;
    for (int j = 0; j <= count + 3; ++j) x.push_back(start + h * j);
    for (int j = 0; j < count + 3; ++j) {
        Polynomial p;
        for (int b = 0; b < count; ++b)
            if (const int s = j - b; s >= 0 && s < 4) p += seg[static_cast<std::size_t>(s)] * weight;
        pieces.push_back(p);
    }
    return PiecewisePolynomial(std::move(x), std::move(pieces), 0.0, 0.0);
}

/// Piecewise Gauss-Kronrod quadrature of a piecewise polynomial product over the merged grid.
template <class Fn>
double quad(Fn&& fn, std::vector<double> cuts) {
    return harness::piecewise_quadrature(fn, cuts);
}

} // namespace fixtures
