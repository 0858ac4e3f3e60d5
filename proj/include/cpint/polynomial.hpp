#pragma once

// Dense univariate polynomials with double coefficients, stored from the
// constant term upward. Pieces of a PiecewisePolynomial are expressed in the
// local coordinate t = x - x_left of their interval.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cpint {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coeffs) : c_(coeffs) {}
    explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

    static Polynomial constant(double v) { return Polynomial({v}); }

    [[nodiscard]] std::span<const double> coeffs() const { return c_; }
    [[nodiscard]] std::size_t size() const { return c_.size(); }
    [[nodiscard]] bool empty() const { return c_.empty(); }
    [[nodiscard]] double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }

    /// Degree ignoring trailing exact zeros; the zero polynomial has degree -1.
    [[nodiscard]] int degree() const {
        int d = static_cast<int>(c_.size()) - 1;
        while (d >= 0 && c_[static_cast<std::size_t>(d)] == 0.0) --d;
        return d;
    }

    [[nodiscard]] bool is_zero() const { return degree() < 0; }

    [[nodiscard]] double operator()(double t) const {
        double r = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
        return r;
    }

    [[nodiscard]] Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<double> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
        return Polynomial(std::move(d));
    }

    [[nodiscard]] Polynomial derivative(int n) const {
        Polynomial p = *this;
        for (int i = 0; i < n; ++i) p = p.derivative();
        return p;
    }

    /// Antiderivative vanishing at t = 0.
    [[nodiscard]] Polynomial antiderivative() const {
        std::vector<double> a(c_.size() + 1, 0.0);
        for (std::size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<double>(k + 1);
        return Polynomial(std::move(a));
    }

    /// Exact integral over [lo, hi].
    [[nodiscard]] double integrate(double lo, double hi) const {
        const Polynomial a = antiderivative();
        return a(hi) - a(lo);
    }

    /// q(t) = p(t + s).
    [[nodiscard]] Polynomial shifted(double s) const {
        if (s == 0.0 || c_.size() <= 1) return *this;
        std::vector<double> q = c_;
        const std::size_t n = q.size();
        // Repeated synthetic division (Horner's scheme for the Taylor shift).
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = n - 1; k > i; --k) q[k - 1] += s * q[k];
        return Polynomial(std::move(q));
    }

    /// q(t) = p(a + b t).
    [[nodiscard]] Polynomial compose_linear(double a, double b) const {
        Polynomial result;
        Polynomial power = Polynomial::constant(1.0);
        const Polynomial lin({a, b});
        for (double ck : c_) {
            if (ck != 0.0) result += power * ck;
            power = power * lin;
        }
        return result;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }

    Polynomial& operator*=(double s) {
        for (double& ck : c_) ck *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
    friend Polynomial operator*(double s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<double> r(a.size() + b.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    /// Drops trailing exact zeros.
    [[nodiscard]] Polynomial trimmed() const {
        Polynomial p = *this;
        p.c_.resize(static_cast<std::size_t>(std::max(degree() + 1, 0)));
        return p;
    }

    [[nodiscard]] double max_abs_coeff() const {
        double m = 0.0;
        for (double ck : c_) m = std::max(m, std::abs(ck));
        return m;
    }

    [[nodiscard]] bool all_finite() const {
        return std::all_of(c_.begin(), c_.end(), [](double v) { return std::isfinite(v); });
    }

    /// Coefficient-level equality after trimming trailing zeros.
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        const int da = a.degree();
        if (da != b.degree()) return false;
        for (int k = 0; k <= da; ++k)
            if (a.c_[static_cast<std::size_t>(k)] != b.c_[static_cast<std::size_t>(k)]) return false;
        return true;
    }

private:
    std::vector<double> c_;
};

} // namespace cpint
