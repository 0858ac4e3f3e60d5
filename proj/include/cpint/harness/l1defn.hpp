#pragma once

// The limiting definition of f*g for integrable g: step functions g_n -> g in
// L^1, with f*g_n formed by the bounded-variation construction.

#include <cmath>
#include <vector>

#include "cpint/convolution.hpp"

namespace cpint::harness {

/// Cell averages of g on 2^(n+3) uniform cells over its breakpoint hull.
inline L1Function step_approximant(const L1Function& g, int n) {
    const auto& rep = g.rep();
    const double lo = rep.first(), hi = rep.last();
    const std::size_t cells = std::size_t{1} << (n + 3);
    if (!(hi > lo)) return g;
    std::vector<double> x(cells + 1);
    for (std::size_t k = 0; k <= cells; ++k) x[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(cells);
    x.back() = hi;
    std::vector<Polynomial> pieces;
    pieces.reserve(cells);
    for (std::size_t k = 0; k < cells; ++k)
        pieces.push_back(Polynomial::constant(rep.integral(x[k], x[k + 1]) / (x[k + 1] - x[k])));
    return L1Function(PiecewisePolynomial(std::move(x), std::move(pieces), 0.0, 0.0));
}

struct L1DefnTerm {
    double distance; // ||f*g_n - f*g||
    double bound;    // ||f|| ||g_n - g||_1
};

/// The distances ||f*g_n - f*g|| for n = 1..steps, with their bounds.
inline std::vector<L1DefnTerm> verify_l1defn_limit_terms(const Distribution& f, const L1Function& g, int steps) {
    if (steps < 2) throw InputError("verify_l1defn_limit needs steps >= 2");
    const auto target = convolve_l1(f, g).primitive().rep();
    const double fnorm = alexiewicz_norm(f);
    std::vector<L1DefnTerm> out;
    for (int n = 1; n <= steps; ++n) {
        const auto gn = step_approximant(g, n);
        // f*g_n is continuous with zero tails; its primitive represents it in A_C.
        const auto h = convolve_bv(f, gn.as_bv()).rep();
        const PiecewisePolynomial hz(h.breakpoints(), h.pieces(), 0.0, 0.0);
        const auto [lo, hi] = (hz.antiderivative() - target).range();
        out.push_back({hi - lo, fnorm * integral_of_abs(gn.rep() - g.rep())});
    }
    return out;
}

inline std::vector<double> verify_l1defn_limit(const Distribution& f, const L1Function& g, int steps) {
    std::vector<double> out;
    for (const auto& t : verify_l1defn_limit_terms(f, g, steps)) out.push_back(t.distance);
    return out;
}

} // namespace cpint::harness
