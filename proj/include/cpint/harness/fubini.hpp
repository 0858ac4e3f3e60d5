#pragma once

// Interchange of iterated integrals of f(y) g(x, y) for two-variable kernels
// drawn from families whose inner integrals are exact in both orders.

#include <cmath>
#include <variant>

#include "cpint/convolution.hpp"
#include "cpint/harness/oracles.hpp"
#include "cpint/stieltjes.hpp"

namespace cpint::harness {

/// g(x, y) = g_n(x - y) chi_[alpha, beta](x) with g_n of bounded variation and integrable.
struct ShiftedWindowKernel {
    L1Function profile;
    double alpha;
    double beta;
};

/// g(x, y) = a(x) b(y) with a integrable and b of bounded variation.
struct SeparableKernel {
    L1Function a;
    BVFunction b;
};

using KernelDescriptor = std::variant<ShiftedWindowKernel, SeparableKernel>;

struct FubiniResult {
    double I1; // dy inside, dx outside
    double I2; // dx inside, dy outside
};

namespace detail {

/// Integral of f K over [s0, s1] by parts on the finite interval, where F
/// vanishes at s0: F(s1) K(s1+) minus the integral of F against dK on [s0, s1]
/// (density part plus the jumps of K inside the interval).
inline double integrate_on(const Distribution& f, const BVFunction& K, double s0, double s1) {
    const auto& F = f.primitive().rep();
    const auto mu = measure_of(K);
    const auto grid = merge_grids(merge_grids(F.breakpoints(), mu.density.breakpoints()), {s0, s1});
    const auto Fr = F.refined(grid);
    const auto dK = mu.density.refined(grid);
    double inner = 0.0;
    for (std::size_t i = 0; i < Fr.piece_count(); ++i)
        if (grid[i] >= s0 && grid[i + 1] <= s1) inner += (Fr.pieces()[i] * dK.pieces()[i]).integrate(0.0, Fr.length(i));
    for (const auto& atom : mu.atoms)
        if (atom.location >= s0 && atom.location <= s1) inner += F(atom.location) * atom.mass;
    const auto& bp = K.breakpoints();
    const auto it = std::lower_bound(bp.begin(), bp.end(), s1);
    const double k1 = (it != bp.end() && *it == s1) ? K.right_limit(static_cast<std::size_t>(it - bp.begin()))
                                                    : K.rep()(s1);
    return F(s1) * k1 - inner;
}

/// The y-profile K(y) = integral over [alpha, beta] of g_n(x - y) dx = G_n(beta - y) - G_n(alpha - y).
inline PiecewisePolynomial window_profile(const ShiftedWindowKernel& k) {
    const auto G = k.profile.rep().antiderivative().reflected();
    return linear_combination(1.0, G.translated(k.beta), -1.0, G.translated(k.alpha));
}

} // namespace detail

/// Both iterated integrals. With `compact_support` the outer y-integral is
/// taken only over the support hull of f, which is what the interchange needs
/// when the kernel is not dominated by an integrable bound.
inline FubiniResult fubini_check(const Distribution& f, const KernelDescriptor& kernel, const OracleConfig& cfg = {},
                                 bool compact_support = false) {
    cfg.validate();
    if (const auto* w = std::get_if<ShiftedWindowKernel>(&kernel)) {
        if (!(w->alpha < w->beta) || !std::isfinite(w->alpha) || !std::isfinite(w->beta))
            throw InputError("fubini_check: window needs finite alpha < beta");
        const auto inner_y = convolve_bv(f, w->profile.as_bv());
        const double I1 = inner_y.rep().integral(w->alpha, w->beta);
        const auto K = detail::window_profile(*w);
        double I2;
        if (compact_support) {
            const auto hull = support_of(f);
            I2 = hull.empty ? 0.0 : detail::integrate_on(f, BVFunction(K), hull.lo.value(), hull.hi.value());
        } else {
            I2 = integrate_product(f, BVFunction(K));
        }
        return {I1, I2};
    }
    const auto& s = std::get<SeparableKernel>(kernel);
    // Inner dy integral is a(x) times the one-dimensional product integral.
    const double fb = integrate_product(f, s.b);
    const double I1 = s.a.rep().scaled(fb).total_integral();
    const double mass = s.a.integral();
    double I2;
    if (compact_support) {
        const auto hull = support_of(f);
        const BVFunction bm(s.b.rep().scaled(mass));
        I2 = hull.empty ? 0.0 : detail::integrate_on(f, bm, hull.lo.value(), hull.hi.value());
    } else {
        I2 = integrate_product(f, BVFunction(s.b.rep().scaled(mass), s.b.point_values()));
    }
    return {I1, I2};
}

} // namespace cpint::harness
