#pragma once

// Seeded random instances of every value kind. Breakpoints live on a dyadic
// grid so that sums and translations of breakpoints are exact in binary
// floating point; smooth kinds are built from cubic B-splines with dyadic
// coefficients so that their smoothness holds exactly on coefficients.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cpint/bv.hpp"
#include "cpint/primitive.hpp"

namespace cpint::harness {

inline constexpr double kQuantum = 1.0 / 256.0;

/// splitmix64 finaliser; derives independent sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool chance(double p) { return uniform(0.0, 1.0) < p; }

    /// Multiple of kQuantum in [lo, hi].
    double dyadic(double lo, double hi) {
        return kQuantum * integer(static_cast<int>(std::ceil(lo / kQuantum)), static_cast<int>(std::floor(hi / kQuantum)));
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

struct InstanceParams {
    double window = 3.0;      // breakpoints start in [-window, window]
    int max_pieces = 5;
    int max_degree = 3;
    double min_length = 0.125;
    double max_length = 1.5;
    double point_value_chance = 0.3;
    double jump_chance = 0.5;
};

namespace detail {

inline std::vector<double> random_breakpoints(Rng& rng, const InstanceParams& p) {
    const int n = rng.integer(1, p.max_pieces);
    std::vector<double> x{rng.dyadic(-p.window, p.window - p.min_length)};
    for (int i = 0; i < n; ++i) x.push_back(x.back() + rng.dyadic(p.min_length, p.max_length));
    return x;
}

/// Random polynomial of degree <= max_degree whose values on [0, len] stay O(1).
inline Polynomial random_piece(Rng& rng, int max_degree, double len, double c0) {
    const int d = rng.integer(0, max_degree);
    std::vector<double> c(static_cast<std::size_t>(d + 1));
    c[0] = c0;
    for (int k = 1; k <= d; ++k) c[static_cast<std::size_t>(k)] = rng.uniform(-1.0, 1.0) / std::pow(len, k - 1);
    return Polynomial(std::move(c));
}

/// Segments of 6 h^3 times the uniform cubic B-spline in local coordinates.
inline std::array<Polynomial, 4> bspline_segments(double h) {
    return {Polynomial({0.0, 0.0, 0.0, 1.0}), Polynomial({h * h * h, 3 * h * h, 3 * h, -3.0}),
            Polynomial({4 * h * h * h, 0.0, -6 * h, 3.0}), Polynomial({h * h * h, -3 * h * h, 3 * h, -1.0})};
}

} // namespace detail

/// F in B_C: continuous by construction (each piece starts where the last ended).
inline ContinuousPrimitive random_primitive(Rng& rng, const InstanceParams& p = {}) {
    auto x = detail::random_breakpoints(rng, p);
    std::vector<Polynomial> pieces;
    double prev = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double len = x[i + 1] - x[i];
        auto piece = detail::random_piece(rng, std::max(1, p.max_degree), len, prev);
        if (piece.degree() < 1) piece = Polynomial({prev, rng.uniform(-1.0, 1.0)});
        prev = piece(len);
        pieces.push_back(std::move(piece));
    }
    return ContinuousPrimitive(PiecewisePolynomial(std::move(x), std::move(pieces), 0.0, prev));
}

inline Distribution random_distribution(Rng& rng, const InstanceParams& p = {}) {
    return Distribution(random_primitive(rng, p));
}

/// Piecewise polynomial with jumps, random tails and occasional point values.
inline BVFunction random_bv(Rng& rng, const InstanceParams& p = {}, bool zero_tails = false) {
    auto x = detail::random_breakpoints(rng, p);
    const double left = zero_tails ? 0.0 : rng.uniform(-1.0, 1.0);
    std::vector<Polynomial> pieces;
    double prev = left;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double len = x[i + 1] - x[i];
        const double start = rng.chance(p.jump_chance) ? rng.uniform(-1.0, 1.0) : prev;
        pieces.push_back(detail::random_piece(rng, p.max_degree, len, start));
        prev = pieces.back()(len);
    }
    const double right = zero_tails ? 0.0 : (rng.chance(p.jump_chance) ? rng.uniform(-1.0, 1.0) : prev);
    std::map<double, double> pv;
    for (double xi : x)
        if (rng.chance(p.point_value_chance)) pv.emplace(xi, rng.uniform(-1.5, 1.5));
    return BVFunction(PiecewisePolynomial(std::move(x), std::move(pieces), left, right), pv);
}

/// Continuous BV function (no atoms, no point values).
inline BVFunction random_continuous_bv(Rng& rng, const InstanceParams& p = {}) {
    InstanceParams q = p;
    q.jump_chance = 0.0;
    q.point_value_chance = 0.0;
    return random_bv(rng, q);
}

/// Compactly supported, possibly discontinuous.
inline L1Function random_l1(Rng& rng, const InstanceParams& p = {}) {
    InstanceParams q = p;
    q.point_value_chance = 0.0;
    return L1Function(random_bv(rng, q, true).rep());
}

/// Step function with zero tails: its derivative measure is pure atoms.
inline BVFunction random_step(Rng& rng, const InstanceParams& p = {}) {
    InstanceParams q = p;
    q.max_degree = 0;
    q.jump_chance = 1.0;
    return random_bv(rng, q, true);
}

/// Sum of cubic B-splines with dyadic coefficients on a uniform dyadic knot
/// grid: C^2 with zero tails, exactly.
inline PiecewisePolynomial random_bspline_sum(Rng& rng, double window = 2.0) {
    const double h = std::ldexp(1.0, -rng.integer(0, 2));
    const int count = rng.integer(1, 4);
    const double start = rng.dyadic(-window, window) - 0.5 * h * (count + 3);
    std::vector<double> coef(static_cast<std::size_t>(count));
    for (auto& c : coef) {
        c = 0.125 * rng.integer(-16, 16);
        if (c == 0.0) c = 0.5;
    }
    const auto seg = detail::bspline_segments(h);
    const int npieces = count + 3;
    std::vector<double> x;
    std::vector<Polynomial> pieces;
    for (int j = 0; j <= npieces; ++j) x.push_back(start + h * j);
    for (int j = 0; j < npieces; ++j) {
        Polynomial piece;
        for (int b = 0; b < count; ++b)
            if (const int s = j - b; s >= 0 && s < 4) piece += seg[static_cast<std::size_t>(s)] * coef[static_cast<std::size_t>(b)];
        pieces.push_back(piece);
    }
    return PiecewisePolynomial(std::move(x), std::move(pieces), 0.0, 0.0);
}

inline TestFunction random_test_function(Rng& rng) { return TestFunction(random_bspline_sum(rng)); }

/// Smooth BV function for derivative tests: a C^2 cubic bump, or its C^3
/// quartic primitive (a smoothed ramp).
inline BVFunction random_smooth_bv(Rng& rng, bool ramp) {
    auto bump = random_bspline_sum(rng);
    if (!ramp) return BVFunction(bump);
    return BVFunction(bump.antiderivative());
}

/// F_ramp: 0 / x / 1.
inline Distribution ramp_distribution() {
    return make_distribution(PiecewisePolynomial({0.0, 1.0}, {Polynomial({0.0, 1.0})}, 0.0, 1.0));
}

/// F_tent: 0 / x / 2 - x / 0 on (-inf,0] / [0,1] / [1,2] / [2,inf).
inline Distribution tent_distribution() {
    return make_distribution(
        PiecewisePolynomial({0.0, 1.0, 2.0}, {Polynomial({0.0, 1.0}), Polynomial({1.0, -1.0})}, 0.0, 0.0));
}

/// chi_(0,1) as an integrable function.
inline L1Function unit_box() { return L1Function(PiecewisePolynomial({0.0, 1.0}, {Polynomial({1.0})}, 0.0, 0.0)); }

/// Unit-mass C^1 kernel: the centred quadratic B-spline on [-1.5, 1.5].
inline L1Function quadratic_bspline_kernel() {
    return L1Function(PiecewisePolynomial({-1.5, -0.5, 0.5, 1.5},
                                          {Polynomial({0.0, 0.0, 0.5}), Polynomial({0.5, 1.0, -1.0}),
                                           Polynomial({0.5, -1.0, 0.5})},
                                          0.0, 0.0));
}

/// Tent of height 1 on [0, 2] as an integrable function.
inline L1Function tent_kernel() {
    return L1Function(PiecewisePolynomial({0.0, 1.0, 2.0}, {Polynomial({0.0, 1.0}), Polynomial({1.0, -1.0})}, 0.0, 0.0));
}

} // namespace cpint::harness
