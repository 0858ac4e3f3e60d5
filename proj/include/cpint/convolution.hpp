#pragma once

// Convolutions of distributions with BV and integrable functions, mollifiers,
// derivatives and primitives of convolutions, distributional pairings and
// supports.
//
// Everything reduces to one exact kernel: the Lebesgue convolution of a
// piecewise polynomial A (constant tails allowed) with a finite signed measure
// whose density is compactly supported. Each pair of pieces contributes up to
// three polynomial pieces on the Minkowski grid of breakpoint sums; shifts
// onto the output grid only ever use differences of grid points, so
// translating either input translates the output coefficient for coefficient
// whenever breakpoint sums are exact.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cpint/bv.hpp"
#include "cpint/primitive.hpp"
#include "cpint/stieltjes.hpp"

namespace cpint {

/// A function continuous on the extended line: continuous pieces, finite tails.
class ExtendedContinuousFunction {
public:
    ExtendedContinuousFunction() = default;

    /// Validates exactly.
    explicit ExtendedContinuousFunction(PiecewisePolynomial rep) : rep_(std::move(rep)) {
        if (rep_.max_jump(0) != 0.0) throw InputError("function is not continuous");
    }

    /// Accepts roundoff-level continuity defects and re-chains the pieces.
    static ExtendedContinuousFunction from_computed(const PiecewisePolynomial& rep,
                                                    double rel_tol = kContinuityTolerance) {
        if (rep.max_jump(0) > rel_tol * rep.scale()) throw InputError("computed function is not continuous");
        return ExtendedContinuousFunction(ContinuousPrimitive::snap_continuous(rep, rep.left_tail()));
    }

    [[nodiscard]] const PiecewisePolynomial& rep() const { return rep_; }
    [[nodiscard]] double operator()(double x) const { return rep_(x); }
    [[nodiscard]] double at(const ExtendedReal& x) const { return rep_.at(x); }
    [[nodiscard]] double sup_abs() const { return rep_.sup_abs(); }

    friend bool operator==(const ExtendedContinuousFunction&, const ExtendedContinuousFunction&) = default;

private:
    PiecewisePolynomial rep_;
};

namespace detail {

/// Collects polynomial contributions on a fixed sorted output grid.
class GridAccumulator {
public:
    explicit GridAccumulator(std::vector<double> grid) : grid_(std::move(grid)), acc_(grid_.size() - 1) {}

    /// Adds h(x - origin) on [from, to]; both ends are grid points.
    void add(const Polynomial& h, double origin, double from, double to) {
        if (h.is_zero()) return;
        for (std::size_t k = index(from), end = index(to); k < end; ++k) acc_[k] += h.shifted(grid_[k] - origin);
    }

    /// Adds c on (-inf, to].
    void add_left(double c, double to) {
        if (c == 0.0) return;
        left_ += c;
        for (std::size_t k = 0, end = index(to); k < end; ++k) acc_[k] += Polynomial::constant(c);
    }

    /// Adds c on [from, inf).
    void add_right(double c, double from) {
        if (c == 0.0) return;
        right_ += c;
        for (std::size_t k = index(from); k < acc_.size(); ++k) acc_[k] += Polynomial::constant(c);
    }

    void add_everywhere(double c) {
        add_left(c, grid_.front());
        add_right(c, grid_.front());
    }

    [[nodiscard]] PiecewisePolynomial result() && {
        return PiecewisePolynomial(std::move(grid_), std::move(acc_), left_, right_);
    }

private:
    [[nodiscard]] std::size_t index(double x) const {
        return static_cast<std::size_t>(std::lower_bound(grid_.begin(), grid_.end(), x) - grid_.begin());
    }

    std::vector<double> grid_;
    std::vector<Polynomial> acc_;
    double left_ = 0.0;
    double right_ = 0.0;
};

inline double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

/// Rows r_i(u) of p(s - u) q(u) = sum_i s^i r_i(u), integrated in u.
inline std::vector<Polynomial> integrated_rows(const Polynomial& p, const Polynomial& q) {
    const int dp = p.degree();
    std::vector<Polynomial> rows;
    rows.reserve(static_cast<std::size_t>(dp + 1));
    for (int i = 0; i <= dp; ++i) {
        std::vector<double> row(static_cast<std::size_t>(dp - i + 1), 0.0);
        for (int k = i; k <= dp; ++k) {
            const double sign = ((k - i) % 2 == 0) ? 1.0 : -1.0;
            row[static_cast<std::size_t>(k - i)] += p[static_cast<std::size_t>(k)] * binomial(k, i) * sign;
        }
        rows.push_back((Polynomial(std::move(row)) * q).antiderivative());
    }
    return rows;
}

/// sum_i s^i [R_i(upper(s)) - R_i(lower(s))] with linear limits alpha + beta s.
inline Polynomial region_polynomial(const std::vector<Polynomial>& rows, double lo_a, double lo_b, double up_a,
                                    double up_b) {
    Polynomial h;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Polynomial diff = rows[i].compose_linear(up_a, up_b) - rows[i].compose_linear(lo_a, lo_b);
        std::vector<double> c(i, 0.0);
        c.insert(c.end(), diff.coeffs().begin(), diff.coeffs().end());
        h += Polynomial(std::move(c));
    }
    return h;
}

inline void check_degree(int degree, int cap) {
    if (degree > cap)
        throw DegreeOverflow("convolution result degree " + std::to_string(degree) + " exceeds cap " +
                             std::to_string(cap));
}

} // namespace detail

/// x -> integral of A(x - y) d mu(y), exactly.
inline PiecewisePolynomial convolve_measure(const PiecewisePolynomial& A, const SignedMeasure& mu,
                                            int degree_cap = kDefaultDegreeCap) {
    const auto& a = A.breakpoints();
    const auto& d = mu.density.breakpoints();
    const bool has_density = mu.density.piece_count() > 0;

    std::vector<double> grid;
    if (has_density)
        for (double ai : a)
            for (double dj : d) grid.push_back(ai + dj);
    for (const auto& atom : mu.atoms)
        for (double ai : a) grid.push_back(ai + atom.location);
    if (grid.empty()) grid.push_back(a.front());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    detail::GridAccumulator acc(grid);
    const std::size_t na = A.piece_count();

    if (has_density) {
        for (std::size_t j = 0; j < mu.density.piece_count(); ++j) {
            const Polynomial& q = mu.density.pieces()[j];
            if (q.is_zero()) continue;
            const double M = mu.density.length(j);
            const Polynomial Q = q.antiderivative();
            const double mass = Q(M);

            for (std::size_t i = 0; i < na; ++i) {
                const Polynomial& p = A.pieces()[i];
                if (p.is_zero()) continue;
                detail::check_degree(p.degree() + q.degree() + 1, degree_cap);
                const double L = A.length(i);
                const auto rows = detail::integrated_rows(p, q);
                const double origin = a[i] + d[j];
                const double p1 = a[i + 1] + d[j]; // s = L
                const double p2 = a[i] + d[j + 1]; // s = M
                const double end = a[i + 1] + d[j + 1];
                // u ranges over [max(0, s - L), min(M, s)].
                if (p1 <= p2) {
                    acc.add(detail::region_polynomial(rows, 0.0, 0.0, 0.0, 1.0), origin, origin, p1);
                    if (p1 < p2) acc.add(detail::region_polynomial(rows, -L, 1.0, 0.0, 1.0), origin, p1, p2);
                    acc.add(detail::region_polynomial(rows, -L, 1.0, M, 0.0), origin, p2, end);
                } else {
                    acc.add(detail::region_polynomial(rows, 0.0, 0.0, 0.0, 1.0), origin, origin, p2);
                    acc.add(detail::region_polynomial(rows, 0.0, 0.0, M, 0.0), origin, p2, p1);
                    acc.add(detail::region_polynomial(rows, -L, 1.0, M, 0.0), origin, p1, end);
                }
            }

            // A equals its left tail on (-inf, a_0): contributes where x - y < a_0.
            if (const double lt = A.left_tail(); lt != 0.0) {
                detail::check_degree(q.degree() + 1, degree_cap);
                const double origin = a.front() + d[j];
                acc.add_left(lt * mass, origin);
                acc.add((Polynomial::constant(mass) - Q) * lt, origin, origin, a.front() + d[j + 1]);
            }
            if (const double rt = A.right_tail(); rt != 0.0) {
                detail::check_degree(q.degree() + 1, degree_cap);
                const double origin = a.back() + d[j];
                acc.add(Q * rt, origin, origin, a.back() + d[j + 1]);
                acc.add_right(rt * mass, a.back() + d[j + 1]);
            }
        }
    }

    for (const auto& atom : mu.atoms) {
        for (std::size_t i = 0; i < na; ++i) {
            const Polynomial& p = A.pieces()[i];
            detail::check_degree(p.degree(), degree_cap);
            acc.add(p * atom.mass, a[i] + atom.location, a[i] + atom.location, a[i + 1] + atom.location);
        }
        acc.add_left(A.left_tail() * atom.mass, a.front() + atom.location);
        acc.add_right(A.right_tail() * atom.mass, a.back() + atom.location);
    }
    return std::move(acc).result();
}

/// f*g for g of bounded variation: F(inf) g(-inf) + integral of F(x - y) d mu_g(y).
/// Point values of g are null and never influence the result.
inline ExtendedContinuousFunction convolve_bv(const Distribution& f, const BVFunction& g,
                                              int degree_cap = kDefaultDegreeCap) {
    const auto& F = f.primitive();
    auto rep = convolve_measure(F.rep(), measure_of(g), degree_cap);
    rep = linear_combination(1.0, rep, 1.0, PiecewisePolynomial::constant(F.at_infinity() * g.at_neg_inf(), rep.first()));
    return ExtendedContinuousFunction::from_computed(rep);
}

/// Lebesgue convolution F*g of a primitive with an integrable function.
inline ContinuousPrimitive convolve_primitive(const ContinuousPrimitive& F, const L1Function& g,
                                              int degree_cap = kDefaultDegreeCap) {
    return ContinuousPrimitive::from_computed(convolve_measure(F.rep(), SignedMeasure{g.rep(), {}}, degree_cap));
}

/// f*g for integrable g: the distribution whose primitive is F*g.
inline Distribution convolve_l1(const Distribution& f, const L1Function& g, int degree_cap = kDefaultDegreeCap) {
    return Distribution(convolve_primitive(f.primitive(), g, degree_cap));
}

/// Lebesgue convolution of two integrable functions.
inline L1Function convolve_functions(const L1Function& g, const L1Function& h, int degree_cap = kDefaultDegreeCap) {
    auto rep = convolve_measure(g.rep(), SignedMeasure{h.rep(), {}}, degree_cap);
    return L1Function(PiecewisePolynomial(rep.breakpoints(), rep.pieces(), 0.0, 0.0));
}

/// Convolution of a continuous function (constant tails) with an integrable one.
inline ExtendedContinuousFunction convolve_continuous(const ExtendedContinuousFunction& u, const L1Function& h,
                                                      int degree_cap = kDefaultDegreeCap) {
    return ExtendedContinuousFunction::from_computed(
        convolve_measure(u.rep(), SignedMeasure{h.rep(), {}}, degree_cap));
}

/// g_t(x) = g(x / t) / t.
inline L1Function dilate_kernel(const L1Function& g, double t) {
    if (!(t > 0.0)) throw InputError("kernel scale t must be positive");
    return L1Function(g.rep().dilated(t).scaled(1.0 / t));
}

/// f * g_t; tends to (integral of g) f in the Alexiewicz norm as t -> 0.
inline Distribution mollify(const Distribution& f, const L1Function& g, double t, int degree_cap = kDefaultDegreeCap) {
    return convolve_l1(f, dilate_kernel(g, t), degree_cap);
}

/// True when g and its first n-1 derivatives are continuous across every
/// breakpoint (tails included), so g^(n) carries the whole derivative.
inline bool is_smooth_to_order(const BVFunction& g, int n, double tolerance = 0.0) {
    for (int k = 0; k < n; ++k)
        if (g.rep().max_jump(k) > tolerance) return false;
    return true;
}

/// (f*g)^(n) computed as f * g^(n).
inline ExtendedContinuousFunction convolve_derivative(const Distribution& f, const BVFunction& g, int n,
                                                      double tolerance = 0.0, int degree_cap = kDefaultDegreeCap) {
    if (n < 1) throw InputError("derivative order must be >= 1");
    if (!is_smooth_to_order(g, n, tolerance))
        throw InputError("convolve_derivative: g is not C^" + std::to_string(n - 1) + " with absolutely continuous pieces");
    PiecewisePolynomial dn = g.rep();
    for (int k = 0; k < n; ++k) dn = dn.derivative();
    return convolve_bv(f, BVFunction(dn), degree_cap);
}

/// f * G with G the primitive of g; equals F*g pointwise.
inline ExtendedContinuousFunction convolve_with_primitive_of(const Distribution& f, const L1Function& g,
                                                             int degree_cap = kDefaultDegreeCap) {
    return convolve_bv(f, g.primitive(), degree_cap);
}

/// Double integral of F(y) G(x) phi''(x + y), with G the primitive of g; equals <f*g, phi>.
inline double pairing_convolution(const Distribution& f, const L1Function& g, const TestFunction& phi,
                                  int degree_cap = kDefaultDegreeCap) {
    const auto G = g.rep().antiderivative();
    const auto phi2 = phi.rep().derivative().derivative();
    // K(y) = integral of G(u - y) phi''(u) du; phi'' has zero mass so K vanishes at infinity.
    const auto K = convolve_measure(G.reflected(), SignedMeasure{phi2, {}}, degree_cap);
    const PiecewisePolynomial Kc(K.breakpoints(), K.pieces(), 0.0, 0.0);
    return integral_of_product(f.primitive().rep(), Kc);
}

/// Closed interval hull; `empty` for the zero function.
struct SupportHull {
    bool empty = true;
    ExtendedReal lo = ExtendedReal::neg_inf();
    ExtendedReal hi = ExtendedReal::pos_inf();
};

namespace detail {

inline SupportHull hull_of_flags(const PiecewisePolynomial& rep, const std::vector<bool>& active, bool left,
                                 bool right) {
    SupportHull s;
    std::ptrdiff_t first = -1, last = -1;
    for (std::size_t i = 0; i < active.size(); ++i)
        if (active[i]) {
            if (first < 0) first = static_cast<std::ptrdiff_t>(i);
            last = static_cast<std::ptrdiff_t>(i);
        }
    if (!left && !right && first < 0) return s;
    s.empty = false;
    s.lo = left ? ExtendedReal::neg_inf() : ExtendedReal(rep.breakpoints()[first < 0 ? rep.piece_count() : static_cast<std::size_t>(first)]);
    s.hi = right ? ExtendedReal::pos_inf() : ExtendedReal(rep.breakpoints()[last < 0 ? 0 : static_cast<std::size_t>(last) + 1]);
    return s;
}

} // namespace detail

/// Hull of the set where the function is nonzero (pieces below rel_tol * scale count as zero).
inline SupportHull support_of(const ExtendedContinuousFunction& h, double rel_tol = 1e-12) {
    const auto& rep = h.rep();
    const double tol = rel_tol * rep.scale();
    std::vector<bool> active(rep.piece_count());
    for (std::size_t i = 0; i < rep.piece_count(); ++i) {
        const PiecewisePolynomial one({0.0, rep.length(i)}, {rep.pieces()[i]}, 0.0, 0.0);
        active[i] = one.sup_abs() > tol;
    }
    return detail::hull_of_flags(rep, active, std::abs(rep.left_tail()) > tol, std::abs(rep.right_tail()) > tol);
}

/// Hull of the set where the primitive varies.
inline SupportHull support_of(const Distribution& f, double rel_tol = 1e-12) {
    const auto& rep = f.primitive().rep();
    const double tol = rel_tol * rep.scale();
    std::vector<bool> active(rep.piece_count());
    for (std::size_t i = 0; i < rep.piece_count(); ++i)
        active[i] = detail::piece_variation(rep.pieces()[i], rep.length(i)) > tol;
    return detail::hull_of_flags(rep, active, false, false);
}

} // namespace cpint
