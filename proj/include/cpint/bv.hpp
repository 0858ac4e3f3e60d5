#pragma once

// Functions of bounded variation on the real line, their normalisations and
// derivative measures, and compactly supported integrable functions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cpint/piecewise.hpp"

namespace cpint {

/// A BV function: a piecewise polynomial (jumps allowed) plus explicit values at
/// breakpoints. A breakpoint without an explicit value takes its right limit.
class BVFunction {
public:
    BVFunction() : BVFunction(PiecewisePolynomial::constant(0.0)) {}

    explicit BVFunction(PiecewisePolynomial rep, const std::map<double, double>& point_values = {})
        : rep_(std::move(rep)) {
        std::vector<double> extra;
        for (const auto& [x, v] : point_values) {
            if (!std::isfinite(x) || !std::isfinite(v)) throw InputError("non-finite point value");
            if (!std::binary_search(rep_.breakpoints().begin(), rep_.breakpoints().end(), x)) extra.push_back(x);
        }
        if (!extra.empty()) rep_ = rep_.refined(merge_grids(rep_.breakpoints(), extra));
        values_.assign(rep_.breakpoints().size(), std::nullopt);
        for (const auto& [x, v] : point_values) values_[index_of(x)] = v;
    }

    static BVFunction constant(double v) { return BVFunction(PiecewisePolynomial::constant(v)); }

    /// Indicator of the open half line (0, inf); its value at the origin is 0.
    static BVFunction open_step() { return BVFunction(PiecewisePolynomial({0.0}, {}, 0.0, 1.0), {{0.0, 0.0}}); }

    /// Indicator of the single point {0}.
    static BVFunction point_indicator() {
        return BVFunction(PiecewisePolynomial({0.0}, {}, 0.0, 0.0), {{0.0, 1.0}});
    }

    [[nodiscard]] const PiecewisePolynomial& rep() const { return rep_; }
    [[nodiscard]] const std::vector<double>& breakpoints() const { return rep_.breakpoints(); }
    [[nodiscard]] double at_neg_inf() const { return rep_.left_tail(); }
    [[nodiscard]] double at_pos_inf() const { return rep_.right_tail(); }
    [[nodiscard]] double left_limit(std::size_t k) const { return rep_.left_limit(k); }
    [[nodiscard]] double right_limit(std::size_t k) const { return rep_.right_limit(k); }
    [[nodiscard]] bool has_point_value(std::size_t k) const { return values_[k].has_value(); }

    /// g(x_k): the explicit value, or the right limit.
    [[nodiscard]] double value_at_breakpoint(std::size_t k) const {
        return values_[k].value_or(right_limit(k));
    }

    [[nodiscard]] double operator()(double x) const {
        const auto& bp = rep_.breakpoints();
        const auto it = std::lower_bound(bp.begin(), bp.end(), x);
        if (it != bp.end() && *it == x) return value_at_breakpoint(static_cast<std::size_t>(it - bp.begin()));
        return rep_(x);
    }

    [[nodiscard]] std::map<double, double> point_values() const {
        std::map<double, double> out;
        for (std::size_t k = 0; k < values_.size(); ++k)
            if (values_[k]) out.emplace(rep_.breakpoints()[k], *values_[k]);
        return out;
    }

    [[nodiscard]] BVFunction translated(double z) const {
        std::map<double, double> pv;
        for (const auto& [x, v] : point_values()) pv.emplace(x + z, v);
        return BVFunction(rep_.translated(z), pv);
    }

    friend bool operator==(const BVFunction&, const BVFunction&) = default;

private:
    [[nodiscard]] std::size_t index_of(double x) const {
        const auto& bp = rep_.breakpoints();
        return static_cast<std::size_t>(std::lower_bound(bp.begin(), bp.end(), x) - bp.begin());
    }

    PiecewisePolynomial rep_;
    std::vector<std::optional<double>> values_;
};

/// Compactly supported piecewise polynomial (zero tails): an element of L^1.
class L1Function {
public:
    L1Function() = default;
    explicit L1Function(PiecewisePolynomial rep) : rep_(std::move(rep)) {
        if (rep_.left_tail() != 0.0 || rep_.right_tail() != 0.0)
            throw InputError("L1 function must have zero tails");
    }

    [[nodiscard]] const PiecewisePolynomial& rep() const { return rep_; }
    [[nodiscard]] double operator()(double x) const { return rep_(x); }
    [[nodiscard]] double integral() const { return rep_.total_integral(); }

    /// Viewed as a BV function (right-continuous at jumps).
    [[nodiscard]] BVFunction as_bv() const { return BVFunction(rep_); }

    /// G(x) = integral of g over (-inf, x].
    [[nodiscard]] BVFunction primitive() const { return BVFunction(rep_.antiderivative()); }

private:
    PiecewisePolynomial rep_;
};

struct Atom {
    double location;
    double mass;
    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite signed measure: absolutely continuous density plus point masses.
struct SignedMeasure {
    PiecewisePolynomial density; // zero tails
    std::vector<Atom> atoms;     // strictly increasing locations

    [[nodiscard]] double total_variation() const {
        double tv = integral_of_abs(density);
        for (const auto& a : atoms) tv += std::abs(a.mass);
        return tv;
    }

    [[nodiscard]] double total_mass() const {
        double m = density.total_integral();
        for (const auto& a : atoms) m += a.mass;
        return m;
    }

    friend bool operator==(const SignedMeasure&, const SignedMeasure&) = default;
};

namespace detail {

/// Arc variation of p over [0, len]: sum of |p| increments between roots of p'.
inline double piece_variation(const Polynomial& p, double len) {
    double v = 0.0;
    const auto pts = critical_points(p, 0.0, len);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) v += std::abs(p(pts[i + 1]) - p(pts[i]));
    return v;
}

} // namespace detail

/// Total variation, counting isolated point values.
inline double variation(const BVFunction& g) {
    const auto& rep = g.rep();
    double v = 0.0;
    for (std::size_t i = 0; i < rep.piece_count(); ++i) v += detail::piece_variation(rep.pieces()[i], rep.length(i));
    for (std::size_t k = 0; k < g.breakpoints().size(); ++k) {
        const double here = g.value_at_breakpoint(k);
        v += std::abs(here - g.left_limit(k)) + std::abs(g.right_limit(k) - here);
    }
    return v;
}

/// |g(-inf)| + V g.
inline double bv_norm(const BVFunction& g) { return std::abs(g.at_neg_inf()) + variation(g); }

/// g_gamma(x) = (1 - gamma) g(x-) + gamma g(x+).
inline BVFunction normalize(const BVFunction& g, double gamma = 1.0) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw InputError("normalize: gamma must lie in [0, 1]");
    std::map<double, double> pv;
    for (std::size_t k = 0; k < g.breakpoints().size(); ++k) {
        const double l = g.left_limit(k), r = g.right_limit(k);
        const double v = (1.0 - gamma) * l + gamma * r;
        if (v != r) pv.emplace(g.breakpoints()[k], v);
    }
    return BVFunction(g.rep(), pv);
}

/// Variation of the a.e.-equivalent normalised representative.
inline double essential_variation(const BVFunction& g) { return variation(normalize(g, 1.0)); }

/// The derivative measure: piecewise derivative plus the one-sided jumps.
/// Point values never produce atoms.
inline SignedMeasure measure_of(const BVFunction& g) {
    SignedMeasure mu{g.rep().derivative(), {}};
    for (std::size_t k = 0; k < g.breakpoints().size(); ++k) {
        const double jump = g.right_limit(k) - g.left_limit(k);
        if (jump != 0.0) mu.atoms.push_back({g.breakpoints()[k], jump});
    }
    return mu;
}

/// a g + b h pointwise; point values are kept wherever either input has one.
inline BVFunction linear_combine(double a, const BVFunction& g, double b, const BVFunction& h) {
    std::map<double, double> pv;
    for (const auto& src : {g.point_values(), h.point_values()})
        for (const auto& [x, v] : src) pv[x] = a * g(x) + b * h(x);
    return BVFunction(linear_combination(a, g.rep(), b, h.rep()), pv);
}

inline BVFunction operator+(const BVFunction& g, const BVFunction& h) { return linear_combine(1.0, g, 1.0, h); }

inline double l1_norm(const L1Function& g) { return integral_of_abs(g.rep()); }

/// Requires zero tails.
inline L1Function as_l1(const BVFunction& g) { return L1Function(g.rep()); }

} // namespace cpint
