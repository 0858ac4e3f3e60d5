#pragma once

// Stieltjes integration of continuous functions against BV integrators, the
// integration-by-parts product integral and the Hoelder bounds.
//
// For continuous F the Henstock-Stieltjes integral against g coincides with
// integration against the derivative measure of g, which is finite and exact
// on this representation.

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "cpint/bv.hpp"
#include "cpint/primitive.hpp"

namespace cpint {

/// Integral of a bounded continuous function against a signed measure.
inline double integrate_against(const PiecewisePolynomial& F, const SignedMeasure& mu) {
    double sum = integral_of_product(F, mu.density);
    for (const auto& a : mu.atoms) sum += F(a.location) * a.mass;
    return sum;
}

/// The Stieltjes integral of F with respect to g.
inline double hs_integral(const ContinuousPrimitive& F, const BVFunction& g) {
    return integrate_against(F.rep(), measure_of(g));
}

/// Integral of f g over the real line by parts: F(inf) g(inf) - int F dg_gamma.
/// Independent of gamma.
inline double integrate_product(const Distribution& f, const BVFunction& g, double gamma = 1.0) {
    const auto& F = f.primitive();
    return F.at_infinity() * g.at_pos_inf() - hs_integral(F, normalize(g, gamma));
}

/// inf |g| over R, including tails, one-sided limits and point values.
inline double inf_abs(const BVFunction& g) {
    double m = std::min(std::abs(g.at_neg_inf()), std::abs(g.at_pos_inf()));
    for (std::size_t k = 0; k < g.breakpoints().size(); ++k) {
        m = std::min({m, std::abs(g.left_limit(k)), std::abs(g.right_limit(k)), std::abs(g.value_at_breakpoint(k))});
    }
    const auto& rep = g.rep();
    for (std::size_t i = 0; i < rep.piece_count(); ++i) {
        const auto& p = rep.pieces()[i];
        if (!real_roots(p, 0.0, rep.length(i)).empty() || p.is_zero()) return 0.0;
        for (double t : critical_points(p, 0.0, rep.length(i))) m = std::min(m, std::abs(p(t)));
    }
    return m;
}

struct HolderBounds {
    double lhs;
    double bound_tight;
    double bound_norm;
};

/// |int f g| <= |int f| inf|g| + ||f|| V g <= ||f|| ||g||_BV.
inline HolderBounds holder_check(const Distribution& f, const BVFunction& g) {
    const double af = alexiewicz_norm(f);
    return {std::abs(integrate_product(f, g)), std::abs(integral(f)) * inf_abs(g) + af * variation(g),
            af * bv_norm(g)};
}

/// The same bounds with g replaced by its normalisation g_gamma.
inline HolderBounds holder_check_normalized(const Distribution& f, const BVFunction& g, double gamma = 1.0) {
    return holder_check(f, normalize(g, gamma));
}

} // namespace cpint
