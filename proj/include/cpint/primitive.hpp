#pragma once

// Distributions with a continuous primitive: the primitive carrier, the
// integral, the Alexiewicz norms, linear structure, translation, pairing with
// test functions and approximation by integrable functions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cpint/extended_real.hpp"
#include "cpint/piecewise.hpp"

namespace cpint {

/// Relative tolerance for accepting computed results as continuous before snapping.
inline constexpr double kContinuityTolerance = 1e-9;

/// F continuous on the extended line with F(-inf) = 0 and F(inf) finite.
class ContinuousPrimitive {
public:
    ContinuousPrimitive() = default;

    /// Validates exactly: zero left tail and matching one-sided limits everywhere.
    explicit ContinuousPrimitive(PiecewisePolynomial rep) : rep_(std::move(rep)) {
        if (rep_.left_tail() != 0.0) throw InputError("primitive must vanish at -inf (left_tail != 0)");
        for (std::size_t k = 0; k < rep_.breakpoints().size(); ++k)
            if (rep_.left_limit(k) != rep_.right_limit(k))
                throw InputError("primitive is discontinuous at x = " + std::to_string(rep_.breakpoints()[k]));
    }

    /// Accepts a computed representation whose continuity defects are roundoff
    /// (relative to its scale), then makes every piece start exactly where the
    /// previous one ends.
    static ContinuousPrimitive from_computed(const PiecewisePolynomial& rep,
                                             double rel_tol = kContinuityTolerance) {
        const double tol = rel_tol * rep.scale();
        if (std::abs(rep.left_tail()) > tol) throw InputError("computed primitive has nonzero left tail");
        if (rep.max_jump(0) > tol) throw InputError("computed primitive is not continuous");
        return ContinuousPrimitive(snap_continuous(rep, 0.0));
    }

    /// Re-chains constant terms so continuity holds exactly under Horner evaluation.
    static PiecewisePolynomial snap_continuous(const PiecewisePolynomial& rep, double left_tail) {
        std::vector<Polynomial> pieces = rep.pieces();
        double prev = left_tail;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            std::vector<double> c(pieces[i].coeffs().begin(), pieces[i].coeffs().end());
            if (c.empty()) c.push_back(0.0);
            c[0] = prev;
            pieces[i] = Polynomial(std::move(c));
            prev = pieces[i](rep.length(i));
        }
        return PiecewisePolynomial(rep.breakpoints(), std::move(pieces), left_tail, prev);
    }

    [[nodiscard]] const PiecewisePolynomial& rep() const { return rep_; }
    [[nodiscard]] double operator()(double x) const { return rep_(x); }
    [[nodiscard]] double at(const ExtendedReal& x) const { return rep_.at(x); }
    [[nodiscard]] double at_infinity() const { return rep_.right_tail(); }

    friend bool operator==(const ContinuousPrimitive&, const ContinuousPrimitive&) = default;

private:
    PiecewisePolynomial rep_;
};

/// f = F' for a ContinuousPrimitive F; identified with its primitive.
class Distribution {
public:
    Distribution() = default;
    explicit Distribution(ContinuousPrimitive primitive) : F_(std::move(primitive)) {}

    [[nodiscard]] const ContinuousPrimitive& primitive() const { return F_; }

    /// The pointwise derivative of F (a compactly supported piecewise polynomial).
    [[nodiscard]] PiecewisePolynomial density() const { return F_.rep().derivative(); }

private:
    ContinuousPrimitive F_;
};

/// Compactly supported C^2 piecewise polynomial used in pairings.
class TestFunction {
public:
    explicit TestFunction(PiecewisePolynomial rep, double tolerance = 0.0) : rep_(std::move(rep)) {
        if (rep_.left_tail() != 0.0 || rep_.right_tail() != 0.0)
            throw InputError("test function must have compact support (zero tails)");
        for (int order = 0; order <= 2; ++order)
            if (rep_.max_jump(order) > tolerance)
                throw InputError("test function is not C^2 (derivative of order " + std::to_string(order) +
                                 " jumps)");
    }

    [[nodiscard]] const PiecewisePolynomial& rep() const { return rep_; }
    [[nodiscard]] double operator()(double x) const { return rep_(x); }

private:
    PiecewisePolynomial rep_;
};

inline Distribution make_distribution(ContinuousPrimitive F) { return Distribution(std::move(F)); }

inline Distribution make_distribution(PiecewisePolynomial rep) {
    return Distribution(ContinuousPrimitive(std::move(rep)));
}

inline Distribution zero_distribution() { return {}; }

/// F(b) - F(a) on the extended line.
inline double integral(const Distribution& f, const ExtendedReal& a, const ExtendedReal& b) {
    return f.primitive().at(b) - f.primitive().at(a);
}

/// Integral over the whole line, F(inf).
inline double integral(const Distribution& f) { return f.primitive().at_infinity(); }

/// sup over intervals |integral over I| = max F - min F over the extended line.
inline double alexiewicz_norm(const Distribution& f) {
    const auto [lo, hi] = f.primitive().rep().range();
    return hi - lo;
}

/// sup_x |F(x)|.
inline double alexiewicz_norm_prime(const Distribution& f) { return f.primitive().rep().sup_abs(); }

inline Distribution translate(const Distribution& f, double z) {
    if (!std::isfinite(z)) throw InputError("translation must be finite");
    return Distribution(ContinuousPrimitive::from_computed(f.primitive().rep().translated(z)));
}

inline Distribution linear_combine(double a, const Distribution& f, double b, const Distribution& g) {
    return Distribution(ContinuousPrimitive::from_computed(
        linear_combination(a, f.primitive().rep(), b, g.primitive().rep())));
}

inline Distribution operator-(const Distribution& f, const Distribution& g) { return linear_combine(1, f, -1, g); }
inline Distribution operator+(const Distribution& f, const Distribution& g) { return linear_combine(1, f, 1, g); }

/// sup |F1 - F2| <= tol: equality up to representation roundoff.
inline bool approx_equal(const Distribution& f, const Distribution& g, double tol = 1e-12) {
    return (f.primitive().rep() - g.primitive().rep()).sup_abs() <= tol;
}

/// <f, phi> = -integral of F phi'.
inline double pairing(const Distribution& f, const TestFunction& phi) {
    return -integral_of_product(f.primitive().rep(), phi.rep().derivative());
}

/// An integrable f_n (piecewise-linear, hence absolutely continuous, primitive)
/// with ||f_n - f|| < 3 eps. The primitive is interpolated on a uniform mesh of
/// [-M, M], where M bounds the support of f, fine enough that the interpolant
/// stays within eps of F.
inline Distribution approximate_by_l1(const Distribution& f, double eps) {
    if (!(eps > 0.0)) throw InputError("approximate_by_l1 needs eps > 0");
    const auto& F = f.primitive().rep();
    if (F.degree() <= 1) return f;

    const double M = std::max(std::abs(F.first()), std::abs(F.last()));
    const double slope = F.derivative().sup_abs();
    // |P - F| <= 2 h max|F'| on each mesh cell.
    const double cells = std::ceil(4.0 * M * slope / eps) + 1.0;
    if (cells > 2e6) throw InputError("approximate_by_l1: mesh too fine for eps");
    const auto n = static_cast<std::size_t>(cells);
    const double h = 2.0 * M / static_cast<double>(n);

    std::vector<double> x(n + 1);
    std::vector<double> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        x[k] = k == n ? M : -M + static_cast<double>(k) * h;
        v[k] = F(x[k]);
    }
    std::vector<Polynomial> pieces;
    pieces.reserve(n);
    for (std::size_t k = 0; k < n; ++k) pieces.push_back(Polynomial({v[k], (v[k + 1] - v[k]) / (x[k + 1] - x[k])}));
    return Distribution(ContinuousPrimitive::from_computed(PiecewisePolynomial(std::move(x), std::move(pieces), 0.0, v[n])));
}

} // namespace cpint
