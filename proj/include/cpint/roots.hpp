#pragma once

// Real root isolation on a closed interval. Degree <= 2 uses closed forms;
// higher degrees split the interval at the roots of the derivative (found
// recursively) and bisect every monotone segment that changes sign.

#include <algorithm>
#include <cmath>
#include <vector>

#include "cpint/polynomial.hpp"

namespace cpint {

inline constexpr double kRootTolerance = 1e-14;

namespace detail {

inline void push_if_inside(std::vector<double>& out, double r, double lo, double hi) {
    if (std::isfinite(r) && r >= lo && r <= hi) out.push_back(r);
}

inline double bisect(const Polynomial& p, double a, double b) {
    double fa = p(a);
    if (fa == 0.0) return a;
    if (p(b) == 0.0) return b;
    while (b - a > kRootTolerance) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double fm = p(m);
        if (fm == 0.0) return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

} // namespace detail

/// Sorted real roots of p inside [lo, hi]. The zero polynomial has none by convention.
inline std::vector<double> real_roots(const Polynomial& poly, double lo, double hi) {
    std::vector<double> out;
    const Polynomial p = poly.trimmed();
    const int d = p.degree();
    if (d <= 0 || !(lo <= hi)) return out;

    if (d == 1) {
        detail::push_if_inside(out, -p[0] / p[1], lo, hi);
    } else if (d == 2) {
        const double a = p[2], b = p[1], c = p[0];
        const double disc = b * b - 4.0 * a * c;
        if (disc == 0.0) {
            detail::push_if_inside(out, -b / (2.0 * a), lo, hi);
        } else if (disc > 0.0) {
            // Cancellation-free pairing of the two roots.
            const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
            detail::push_if_inside(out, q / a, lo, hi);
            if (q != 0.0) detail::push_if_inside(out, c / q, lo, hi);
        }
    } else {
        std::vector<double> cuts{lo};
        for (double r : real_roots(p.derivative(), lo, hi))
            if (r > cuts.back()) cuts.push_back(r);
        if (hi > cuts.back()) cuts.push_back(hi);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double a = cuts[i], b = cuts[i + 1];
            const double fa = p(a), fb = p(b);
            if (fa == 0.0) {
                out.push_back(a);
            } else if (fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
                out.push_back(detail::bisect(p, a, b));
            }
        }
        if (p(hi) == 0.0) out.push_back(hi);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Points of [lo, hi] where p may attain an extremum: the endpoints and the
/// interior roots of p'.
inline std::vector<double> critical_points(const Polynomial& p, double lo, double hi) {
    std::vector<double> pts{lo};
    for (double r : real_roots(p.derivative(), lo, hi))
        if (r > lo && r < hi) pts.push_back(r);
    pts.push_back(hi);
    return pts;
}

} // namespace cpint
