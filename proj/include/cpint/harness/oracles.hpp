#pragma once

// Brute-force oracles. None of these share code paths with the exact library
// routines they are used to check: they only evaluate functions pointwise.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cpint/bv.hpp"
#include "cpint/primitive.hpp"

namespace cpint::harness {

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleConfig {
    int partitions = 18;     // maximum number of refinement doublings
    double grid_step = 0.25; // initial cell width
    double tolerance = 1e-10;

    void validate() const {
        if (partitions < 1 || !(grid_step > 0.0) || !(tolerance > 0.0)) throw InputError("invalid oracle config");
    }
};

namespace detail {

/// Sorted unique points of `pts` inside [lo, hi], plus lo and hi.
inline std::vector<double> cells_within(std::vector<double> pts, double lo, double hi) {
    pts.push_back(lo);
    pts.push_back(hi);
    std::erase_if(pts, [&](double p) { return p < lo || p > hi; });
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

/// Romberg-accelerated refinement of midpoint-tagged Riemann-Stieltjes sums
/// sum integrand(m) [integrator(t_n) - integrator(t_{n-1})] over cells whose
/// interiors are free of kinks and jumps. The integrator is called as
/// integrator(t, side) with side = +1 at a cell's left end (right limit),
/// -1 at its right end (left limit) and 0 inside.
template <class Integrand, class Integrator>
double refined_stieltjes_sum(const std::vector<double>& cuts, Integrand&& integrand, Integrator&& integrator,
                             const OracleConfig& cfg) {
    cfg.validate();
    if (cuts.size() < 2) return 0.0;
    auto sum_at = [&](int level) {
        double s = 0.0;
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
            const double a = cuts[c], b = cuts[c + 1];
            const auto base = static_cast<long>(std::ceil((b - a) / cfg.grid_step));
            const long n = std::max(1L, base) << level;
            const double h = (b - a) / static_cast<double>(n);
            double prev = integrator(a, 1);
            for (long k = 1; k <= n; ++k) {
                const double cur = k == n ? integrator(b, -1) : integrator(a + static_cast<double>(k) * h, 0);
                s += integrand(a + (static_cast<double>(k) - 0.5) * h) * (cur - prev);
                prev = cur;
            }
        }
        return s;
    };
    std::vector<double> prev_row{sum_at(0)};
    for (int level = 1; level <= cfg.partitions; ++level) {
        std::vector<double> row{sum_at(level)};
        double factor = 1.0;
        for (std::size_t j = 1; j <= prev_row.size(); ++j) {
            factor *= 4.0;
            row.push_back(row[j - 1] + (row[j - 1] - prev_row[j - 1]) / (factor - 1.0));
        }
        if (std::abs(row.back() - prev_row.back()) < cfg.tolerance) return row.back();
        prev_row = std::move(row);
    }
    throw OracleError("Riemann-Stieltjes sums did not converge");
}

/// g(t) inside a cell, or its one-sided limit at a cell end.
inline double one_sided(const BVFunction& g, double t, int side) {
    if (side != 0) {
        const auto& bp = g.breakpoints();
        const auto it = std::lower_bound(bp.begin(), bp.end(), t);
        if (it != bp.end() && *it == t) {
            const auto k = static_cast<std::size_t>(it - bp.begin());
            return side > 0 ? g.right_limit(k) : g.left_limit(k);
        }
    }
    return g(t);
}

} // namespace detail

/// f*g(x) as the limit of Riemann sums of g(x - y) dF(y) over the support window.
inline double oracle_convolve(const Distribution& f, const BVFunction& g, double x, const OracleConfig& cfg = {}) {
    const auto& F = f.primitive().rep();
    std::vector<double> pts = F.breakpoints();
    for (double b : g.breakpoints()) pts.push_back(x - b);
    const auto cuts = detail::cells_within(std::move(pts), F.first(), F.last());
    return detail::refined_stieltjes_sum(cuts, [&](double z) { return g(x - z); }, [&](double t, int) { return F(t); }, cfg);
}

/// The reversed order: Riemann sums of g(y) d[-F(x - y)].
inline double oracle_convolve_reversed(const Distribution& f, const BVFunction& g, double x,
                                       const OracleConfig& cfg = {}) {
    const auto& F = f.primitive().rep();
    std::vector<double> pts = g.breakpoints();
    for (double a : F.breakpoints()) pts.push_back(x - a);
    const auto cuts = detail::cells_within(std::move(pts), x - F.last(), x - F.first());
    return detail::refined_stieltjes_sum(cuts, [&](double y) { return g(y); }, [&](double t, int) { return -F(x - t); },
                                         cfg);
}

/// Riemann-Stieltjes sums of F dg: refined sums over the open cells between
/// breakpoints plus F(c) times the jump g(c+) - g(c-) at each breakpoint
/// (the sum with tags placed on the jump points).
inline double oracle_stieltjes(const ContinuousPrimitive& F, const BVFunction& g, const OracleConfig& cfg = {}) {
    std::vector<double> pts = F.rep().breakpoints();
    pts.insert(pts.end(), g.breakpoints().begin(), g.breakpoints().end());
    const auto cuts = detail::cells_within(std::move(pts), g.breakpoints().front(), g.breakpoints().back());
    double sum = detail::refined_stieltjes_sum(
        cuts, [&](double z) { return F(z); }, [&](double t, int side) { return detail::one_sided(g, t, side); }, cfg);
    for (std::size_t k = 0; k < g.breakpoints().size(); ++k)
        sum += F(g.breakpoints()[k]) * (g.right_limit(k) - g.left_limit(k));
    return sum;
}

namespace detail {

/// Values of F at candidate points: breakpoints, a uniform sample of every
/// piece, sampled local extrema refined by golden-section search, and tails.
inline std::vector<double> candidate_values(const PiecewisePolynomial& F, int samples_per_piece) {
    std::vector<double> values{F.left_tail(), F.right_tail()};
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    for (std::size_t i = 0; i < F.piece_count(); ++i) {
        const double a = F.breakpoints()[i], b = F.breakpoints()[i + 1];
        auto at = [&](double t) { return F.pieces()[i](t - a); };
        std::vector<double> xs(static_cast<std::size_t>(samples_per_piece) + 1);
        for (int k = 0; k <= samples_per_piece; ++k)
            xs[static_cast<std::size_t>(k)] = a + (b - a) * k / samples_per_piece;
        for (double t : xs) values.push_back(at(t));
        // Discrete extrema (ends compared with their single neighbour) bracket
        // the continuous ones, including extrema just inside a piece end.
        for (std::size_t k = 0; k < xs.size(); ++k) {
            const std::size_t kl = k == 0 ? 0 : k - 1, kr = k + 1 == xs.size() ? k : k + 1;
            const double l = at(xs[kl]), m = at(xs[k]), r = at(xs[kr]);
            const double sign = (m >= l && m >= r) ? 1.0 : ((m <= l && m <= r) ? -1.0 : 0.0);
            if (sign == 0.0) continue;
            double lo = xs[kl], hi = xs[kr];
            for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
                const double c = hi - phi * (hi - lo), d = lo + phi * (hi - lo);
                if (sign * at(c) > sign * at(d)) hi = d;
                else lo = c;
            }
            values.push_back(at(0.5 * (lo + hi)));
        }
    }
    return values;
}

} // namespace detail

/// Alexiewicz norm by brute force: the largest |F(b) - F(a)| over all pairs
/// of candidate endpoints.
inline double oracle_alexiewicz(const PiecewisePolynomial& F, int samples_per_piece = 64) {
    const auto values = detail::candidate_values(F, samples_per_piece);
    double best = 0.0;
    for (double u : values)
        for (double v : values) best = std::max(best, std::abs(u - v));
    return best;
}

/// sup |F| over the same candidates (pairs with the endpoint -inf).
inline double oracle_alexiewicz_prime(const PiecewisePolynomial& F, int samples_per_piece = 64) {
    double best = 0.0;
    for (double v : detail::candidate_values(F, samples_per_piece)) best = std::max(best, std::abs(v));
    return best;
}

/// Adaptive Gauss-Kronrod integral of a smooth function on [a, b].
template <class Fn>
double quadrature(Fn&& fn, double a, double b, double tol = 1e-13) {
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(fn, a, b, 15, tol);
}

/// Piecewise Gauss-Kronrod integral over the cells of `cuts`.
template <class Fn>
double piecewise_quadrature(Fn&& fn, const std::vector<double>& cuts, double tol = 1e-13) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) s += quadrature(fn, cuts[i], cuts[i + 1], tol);
    return s;
}

/// int_lo^hi s^{-alpha} w(s) ds on a graded mesh s_k = (k/N)^2 (hi - lo)
/// with the singular factor at lo. The innermost cell is split geometrically
/// and the last sliver [0, delta] uses the leading term w(0) delta^{1-alpha}/(1-alpha).
template <class Smooth>
double graded_singular_integral(Smooth&& w, double alpha, double len, int N = 10000) {
    using boost::math::quadrature::gauss;
    auto integrand = [&](double s) { return std::pow(s, -alpha) * w(s); };
    auto node = [&](int k) {
        const double r = static_cast<double>(k) / N;
        return r * r * len;
    };
    double sum = 0.0;
    for (int k = 1; k < N; ++k) sum += gauss<double, 10>::integrate(integrand, node(k), node(k + 1));
    double hi = node(1);
    for (int split = 0; split < 200; ++split) {
        const double lo = 0.5 * hi;
        sum += gauss<double, 10>::integrate(integrand, lo, hi);
        hi = lo;
        if (std::pow(hi, 1.0 - alpha) < 1e-14) break;
    }
    return sum + w(0.0) * std::pow(hi, 1.0 - alpha) / (1.0 - alpha);
}

/// f*g(x) for f = g = y^{-alpha} chi_(0,1), by graded-mesh quadrature with
/// both singular endpoints split off at the midpoint of the overlap.
inline double oracle_power_convolution(double alpha, double x, int N = 10000) {
    const double lo = std::max(0.0, x - 1.0), hi = std::min(1.0, x);
    if (!(hi > lo)) return 0.0;
    const double mid = 0.5 * (lo + hi);
    double sum = 0.0;
    // Singular factor y^{-alpha} at y = lo (only when lo = 0).
    if (lo == 0.0)
        sum += graded_singular_integral([&](double s) { return std::pow(x - s, -alpha); }, alpha, mid, N);
    else
        sum += quadrature([&](double y) { return std::pow(y, -alpha) * std::pow(x - y, -alpha); }, lo, mid);
    // Singular factor (x - y)^{-alpha} at y = hi (only when hi = x); s = x - y.
    if (hi == x)
        sum += graded_singular_integral([&](double s) { return std::pow(x - s, -alpha); }, alpha, x - mid, N);
    else
        sum += quadrature([&](double y) { return std::pow(y, -alpha) * std::pow(x - y, -alpha); }, mid, hi);
    return sum;
}

/// Closed form x^{1-2 alpha} Gamma(1-alpha)^2 / Gamma(2-2 alpha) for 0 < x <= 1.
inline double power_convolution_closed_form(double alpha, double x) {
    const double g = std::tgamma(1.0 - alpha);
    return std::pow(x, 1.0 - 2.0 * alpha) * g * g / std::tgamma(2.0 - 2.0 * alpha);
}

/// For f(y) = sin(pi y)/log(y) and g = chi_(0,1), x >= 2: the direct integral
/// over [x-1, x] and its integrated-by-parts form. Needs x > 2 so that the
/// logarithm stays away from zero.
struct SinLogValues {
    double direct;
    double by_parts;
};

inline SinLogValues oracle_sin_log(double x) {
    using std::numbers::pi;
    if (!(x > 2.0) || !std::isfinite(x)) throw InputError("oracle_sin_log needs finite x > 2");
    const double direct = quadrature([](double y) { return std::sin(pi * y) / std::log(y); }, x - 1.0, x);
    const double rest =
        quadrature([](double y) { const double l = std::log(y); return std::cos(pi * y) / (y * l * l); }, x - 1.0, x);
    const double parts =
        std::cos(pi * (x - 1.0)) / (pi * std::log(x - 1.0)) - std::cos(pi * x) / (pi * std::log(x)) - rest / pi;
    return {direct, parts};
}

} // namespace cpint::harness
