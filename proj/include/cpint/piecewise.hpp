#pragma once

// The shared function carrier: finitely many polynomial pieces on a strictly
// increasing breakpoint grid, with constant tails on both sides.
//
// Piece i lives on the open interval (x_i, x_{i+1}) and is expressed in the
// local coordinate t = x - x_i. The left tail is the value on (-inf, x_0),
// the right tail the value on (x_n, inf). Plain evaluation at a breakpoint
// returns the right limit; one-sided limits are available separately.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cpint/extended_real.hpp"
#include "cpint/polynomial.hpp"
#include "cpint/roots.hpp"

namespace cpint {

inline constexpr int kDefaultDegreeCap = 6;

/// Sorted union of two sorted grids (exact duplicates removed).
inline std::vector<double> merge_grids(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

class PiecewisePolynomial {
public:
    PiecewisePolynomial() : PiecewisePolynomial(std::vector<double>{0.0}, {}, 0.0, 0.0) {}

    PiecewisePolynomial(std::vector<double> breakpoints, std::vector<Polynomial> pieces,
                        double left_tail, double right_tail)
        : x_(std::move(breakpoints)), p_(std::move(pieces)), left_(left_tail), right_(right_tail) {
        if (x_.empty()) throw InputError("piecewise polynomial needs at least one breakpoint");
        if (p_.size() + 1 != x_.size())
            throw InputError("expected " + std::to_string(x_.size() - 1) + " pieces, got " +
                             std::to_string(p_.size()));
        for (std::size_t i = 0; i < x_.size(); ++i) {
            if (!std::isfinite(x_[i])) throw InputError("non-finite breakpoint");
            if (i > 0 && !(x_[i - 1] < x_[i])) throw InputError("breakpoints must be strictly increasing");
        }
        for (const auto& piece : p_)
            if (!piece.all_finite()) throw InputError("non-finite coefficient");
        if (!std::isfinite(left_) || !std::isfinite(right_)) throw InputError("non-finite tail");
    }

    static PiecewisePolynomial constant(double v, double anchor = 0.0) {
        return PiecewisePolynomial({anchor}, {}, v, v);
    }

    [[nodiscard]] const std::vector<double>& breakpoints() const { return x_; }
    [[nodiscard]] const std::vector<Polynomial>& pieces() const { return p_; }
    [[nodiscard]] double left_tail() const { return left_; }
    [[nodiscard]] double right_tail() const { return right_; }
    [[nodiscard]] std::size_t piece_count() const { return p_.size(); }
    [[nodiscard]] double length(std::size_t i) const { return x_[i + 1] - x_[i]; }
    [[nodiscard]] double first() const { return x_.front(); }
    [[nodiscard]] double last() const { return x_.back(); }

    [[nodiscard]] int degree() const {
        int d = 0;
        for (const auto& piece : p_) d = std::max(d, piece.degree());
        return d;
    }

    /// Value approached from the left at breakpoint k.
    [[nodiscard]] double left_limit(std::size_t k) const {
        return k == 0 ? left_ : p_[k - 1](length(k - 1));
    }

    /// Value approached from the right at breakpoint k.
    [[nodiscard]] double right_limit(std::size_t k) const {
        return k + 1 == x_.size() ? right_ : p_[k][0];
    }

    /// Index of the interval containing x: -1 for x < x_0, n for x >= x_n,
    /// otherwise i with x_i <= x < x_{i+1}.
    [[nodiscard]] std::ptrdiff_t locate(double x) const {
        const auto it = std::upper_bound(x_.begin(), x_.end(), x);
        const auto idx = static_cast<std::ptrdiff_t>(it - x_.begin()) - 1;
        return idx >= static_cast<std::ptrdiff_t>(p_.size()) ? static_cast<std::ptrdiff_t>(p_.size()) : idx;
    }

    /// Right-continuous evaluation.
    [[nodiscard]] double operator()(double x) const {
        const auto i = locate(x);
        if (i < 0) return left_;
        if (i >= static_cast<std::ptrdiff_t>(p_.size())) return right_;
        const auto k = static_cast<std::size_t>(i);
        return p_[k](x - x_[k]);
    }

    /// Left-continuous evaluation.
    [[nodiscard]] double left_value(double x) const {
        const auto it = std::lower_bound(x_.begin(), x_.end(), x);
        if (it == x_.begin()) return left_;
        const auto k = static_cast<std::size_t>(it - x_.begin()) - 1;
        if (k >= p_.size()) return right_;
        return p_[k](x - x_[k]);
    }

    [[nodiscard]] double at(const ExtendedReal& x) const {
        switch (x.kind()) {
        case ExtendedReal::Kind::NegInf: return left_;
        case ExtendedReal::Kind::PosInf: return right_;
        case ExtendedReal::Kind::Finite: break;
        }
        return (*this)(x.value());
    }

    /// Same function on a finer grid; `grid` must be sorted and contain every breakpoint.
    [[nodiscard]] PiecewisePolynomial refined(const std::vector<double>& grid) const {
        if (grid == x_) return *this;
        std::vector<Polynomial> out;
        out.reserve(grid.size() > 0 ? grid.size() - 1 : 0);
        for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
            const auto i = locate(grid[k]);
            if (i < 0)
                out.push_back(Polynomial::constant(left_));
            else if (i >= static_cast<std::ptrdiff_t>(p_.size()))
                out.push_back(Polynomial::constant(right_));
            else {
                const auto j = static_cast<std::size_t>(i);
                out.push_back(p_[j].shifted(grid[k] - x_[j]));
            }
        }
        return PiecewisePolynomial(grid, std::move(out), left_, right_);
    }

    [[nodiscard]] PiecewisePolynomial translated(double z) const {
        std::vector<double> x = x_;
        for (double& xi : x) xi += z;
        return PiecewisePolynomial(std::move(x), p_, left_, right_);
    }

    /// x -> p(x / t) for t > 0.
    [[nodiscard]] PiecewisePolynomial dilated(double t) const {
        std::vector<double> x = x_;
        for (double& xi : x) xi *= t;
        std::vector<Polynomial> pieces;
        pieces.reserve(p_.size());
        for (const auto& piece : p_) pieces.push_back(piece.compose_linear(0.0, 1.0 / t));
        return PiecewisePolynomial(std::move(x), std::move(pieces), left_, right_);
    }

    /// x -> p(-x).
    [[nodiscard]] PiecewisePolynomial reflected() const {
        std::vector<double> x(x_.rbegin(), x_.rend());
        for (double& xi : x) xi = -xi;
        std::vector<Polynomial> pieces;
        pieces.reserve(p_.size());
        for (std::size_t i = p_.size(); i-- > 0;) pieces.push_back(p_[i].compose_linear(length(i), -1.0));
        return PiecewisePolynomial(std::move(x), std::move(pieces), right_, left_);
    }

    [[nodiscard]] PiecewisePolynomial scaled(double s) const {
        std::vector<Polynomial> pieces = p_;
        for (auto& piece : pieces) piece *= s;
        return PiecewisePolynomial(x_, std::move(pieces), s * left_, s * right_);
    }

    /// Pointwise derivative away from breakpoints; tails become zero.
    [[nodiscard]] PiecewisePolynomial derivative() const {
        std::vector<Polynomial> pieces;
        pieces.reserve(p_.size());
        for (const auto& piece : p_) pieces.push_back(piece.derivative());
        return PiecewisePolynomial(x_, std::move(pieces), 0.0, 0.0);
    }

    /// Continuous antiderivative vanishing at -inf. Requires zero tails.
    [[nodiscard]] PiecewisePolynomial antiderivative() const {
        if (left_ != 0.0 || right_ != 0.0)
            throw InputError("antiderivative requires zero tails (compact support)");
        std::vector<Polynomial> pieces;
        pieces.reserve(p_.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < p_.size(); ++i) {
            Polynomial a = p_[i].antiderivative();
            a += Polynomial::constant(acc);
            acc = a(length(i));
            pieces.push_back(std::move(a));
        }
        return PiecewisePolynomial(x_, std::move(pieces), 0.0, acc);
    }

    /// Integral over a finite interval [lo, hi] (signed: swapped bounds negate).
    [[nodiscard]] double integral(double lo, double hi) const {
        if (lo > hi) return -integral(hi, lo);
        double sum = 0.0;
        if (lo < x_.front()) sum += left_ * (std::min(hi, x_.front()) - lo);
        if (hi > x_.back()) sum += right_ * (hi - std::max(lo, x_.back()));
        for (std::size_t i = 0; i < p_.size(); ++i) {
            const double a = std::max(lo, x_[i]), b = std::min(hi, x_[i + 1]);
            if (a < b) sum += p_[i].integrate(a - x_[i], b - x_[i]);
        }
        return sum;
    }

    /// Integral over the real line. Requires zero tails.
    [[nodiscard]] double total_integral() const {
        if (left_ != 0.0 || right_ != 0.0) throw InputError("integral over R needs zero tails");
        double sum = 0.0;
        for (std::size_t i = 0; i < p_.size(); ++i) sum += p_[i].integrate(0.0, length(i));
        return sum;
    }

    /// Minimum and maximum over the extended line (tails and one-sided limits included).
    [[nodiscard]] std::pair<double, double> range() const {
        double lo = std::min(left_, right_), hi = std::max(left_, right_);
        for (std::size_t i = 0; i < p_.size(); ++i) {
            for (double t : critical_points(p_[i], 0.0, length(i))) {
                const double v = p_[i](t);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        return {lo, hi};
    }

    [[nodiscard]] double sup_abs() const {
        const auto [lo, hi] = range();
        return std::max(std::abs(lo), std::abs(hi));
    }

    /// Magnitude used to scale comparison tolerances.
    [[nodiscard]] double scale() const { return std::max(1.0, sup_abs()); }

    /// Largest |jump| of the order-th derivative across breakpoints (tails count
    /// as constants, so their derivatives are zero).
    [[nodiscard]] double max_jump(int order) const {
        double worst = 0.0;
        for (std::size_t k = 0; k < x_.size(); ++k) {
            const double l = k == 0 ? (order == 0 ? left_ : 0.0) : p_[k - 1].derivative(order)(length(k - 1));
            const double r = k + 1 == x_.size() ? (order == 0 ? right_ : 0.0) : p_[k].derivative(order)[0];
            worst = std::max(worst, std::abs(l - r));
        }
        return worst;
    }

    friend bool operator==(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
        return a.x_ == b.x_ && a.p_ == b.p_ && a.left_ == b.left_ && a.right_ == b.right_;
    }

private:
    std::vector<double> x_;
    std::vector<Polynomial> p_;
    double left_;
    double right_;
};

/// a*P + b*Q on the merged breakpoint grid.
inline PiecewisePolynomial linear_combination(double a, const PiecewisePolynomial& p, double b,
                                              const PiecewisePolynomial& q) {
    const auto grid = merge_grids(p.breakpoints(), q.breakpoints());
    const auto pr = p.refined(grid);
    const auto qr = q.refined(grid);
    std::vector<Polynomial> pieces;
    pieces.reserve(pr.piece_count());
    for (std::size_t i = 0; i < pr.piece_count(); ++i) pieces.push_back(a * pr.pieces()[i] + b * qr.pieces()[i]);
    return PiecewisePolynomial(grid, std::move(pieces), a * p.left_tail() + b * q.left_tail(),
                               a * p.right_tail() + b * q.right_tail());
}

inline PiecewisePolynomial operator+(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
    return linear_combination(1.0, p, 1.0, q);
}

inline PiecewisePolynomial operator-(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
    return linear_combination(1.0, p, -1.0, q);
}

/// Exact integral of P*Q over the real line. Both tail products must vanish.
inline double integral_of_product(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
    if (p.left_tail() * q.left_tail() != 0.0 || p.right_tail() * q.right_tail() != 0.0)
        throw InputError("product does not vanish at infinity");
    const auto grid = merge_grids(p.breakpoints(), q.breakpoints());
    double sum = 0.0;
    const auto pr = p.refined(grid);
    const auto qr = q.refined(grid);
    for (std::size_t i = 0; i < pr.piece_count(); ++i)
        sum += (pr.pieces()[i] * qr.pieces()[i]).integrate(0.0, pr.length(i));
    return sum;
}

/// Exact integral of |P| over a finite window, splitting pieces at sign changes.
inline double integral_of_abs(const PiecewisePolynomial& p) {
    if (p.left_tail() != 0.0 || p.right_tail() != 0.0) throw InputError("|P| not integrable: nonzero tail");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.piece_count(); ++i) {
        const auto& piece = p.pieces()[i];
        const Polynomial anti = piece.antiderivative();
        double prev = 0.0;
        std::vector<double> cuts = real_roots(piece, 0.0, p.length(i));
        cuts.push_back(p.length(i));
        for (double c : cuts) {
            if (c > prev) sum += std::abs(anti(c) - anti(prev));
            prev = std::max(prev, c);
        }
    }
    return sum;
}

} // namespace cpint
