#pragma once

// Property suites: each trial draws random instances from an independent
// sub-seed, evaluates one or more checks (value <= tolerance), and the
// results are aggregated in trial order so reports are reproducible.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "cpint/convolution.hpp"
#include "cpint/harness/fubini.hpp"
#include "cpint/harness/l1defn.hpp"
#include "cpint/harness/oracles.hpp"
#include "cpint/harness/random.hpp"
#include "cpint/io.hpp"
#include "cpint/stieltjes.hpp"

namespace cpint::harness {

/// One measured discrepancy; the check passes when value <= tolerance.
struct Check {
    std::string label;
    double value;
    double tolerance;
};

using Trial = std::function<std::vector<Check>(Rng&)>;

struct Suite {
    std::string name;
    std::string description;
    Trial trial;
};

struct PropertyReport {
    std::string suite;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double worst_slack = 0.0; // largest check value seen
    std::uint64_t seed = 0;
    double elapsed = 0.0; // seconds
    std::optional<std::string> first_failure;

    [[nodiscard]] nlohmann::json to_json() const {
        nlohmann::json j;
        j["suite"] = suite;
        j["trials"] = trials;
        j["failures"] = failures;
        j["worst_slack"] = worst_slack;
        j["seed"] = seed;
        j["elapsed"] = elapsed;
        j["first_failure"] = first_failure ? nlohmann::json(*first_failure) : nlohmann::json(nullptr);
        return j;
    }
};

namespace detail {

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

inline std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    return x;
}

/// Largest coefficient difference of P and Q after refinement to a common
/// grid, relative to the largest coefficient; tails included.
inline double coefficient_distance(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
    const auto grid = merge_grids(p.breakpoints(), q.breakpoints());
    const auto pr = p.refined(grid), qr = q.refined(grid);
    double diff = std::max(std::abs(p.left_tail() - q.left_tail()), std::abs(p.right_tail() - q.right_tail()));
    double size = std::max({1.0, std::abs(p.left_tail()), std::abs(p.right_tail())});
    for (std::size_t i = 0; i < pr.piece_count(); ++i) {
        diff = std::max(diff, (pr.pieces()[i] - qr.pieces()[i]).max_abs_coeff());
        size = std::max(size, pr.pieces()[i].max_abs_coeff());
    }
    return diff / size;
}

inline InstanceParams degree(int d) {
    InstanceParams p;
    p.max_degree = d;
    return p;
}

inline BVFunction scaled(const BVFunction& g, double s) {
    std::map<double, double> pv;
    for (const auto& [x, v] : g.point_values()) pv.emplace(x, s * v);
    return BVFunction(g.rep().scaled(s), pv);
}

/// Random points in [lo, hi] at distance > gap from every breakpoint.
inline std::vector<double> points_away_from(Rng& rng, const std::vector<double>& bp, double lo, double hi,
                                            std::size_t n, double gap) {
    std::vector<double> out;
    for (int guard = 0; out.size() < n && guard < 100000; ++guard) {
        const double x = rng.uniform(lo, hi);
        const auto it = std::lower_bound(bp.begin(), bp.end(), x);
        const bool far = (it == bp.end() || *it - x > gap) && (it == bp.begin() || x - *(it - 1) > gap);
        if (far) out.push_back(x);
    }
    return out;
}

/// F: a zig-zag of total height 1 with `teeth` teeth on [0, 1].
inline Distribution zigzag_distribution(int teeth) {
    std::vector<double> x;
    std::vector<Polynomial> pieces;
    const double h = 1.0 / (2.0 * teeth);
    for (int k = 0; k <= 2 * teeth; ++k) x.push_back(h * k);
    double start = 0.0;
    for (int k = 0; k < 2 * teeth; ++k) {
        pieces.push_back(Polynomial({start, (k % 2 == 0 ? 1.0 : -1.0) / h}));
        start = pieces.back()(x[k + 1] - x[k]);
    }
    return make_distribution(PiecewisePolynomial(std::move(x), std::move(pieces), 0.0, start));
}

// ---- primitive_core ------------------------------------------------------

inline std::vector<Check> norm_equivalence(Rng& rng) {
    const auto f = random_distribution(rng);
    const double n = alexiewicz_norm(f), p = alexiewicz_norm_prime(f);
    return {{"prime <= norm", p - n, 1e-12}, {"norm <= 2 prime", n - 2.0 * p, 1e-12}};
}

inline std::vector<Check> additivity(Rng& rng) {
    const auto f = random_distribution(rng);
    auto pick = [&]() -> ExtendedReal {
        const int k = rng.integer(0, 9);
        if (k == 0) return ExtendedReal::neg_inf();
        if (k == 1) return ExtendedReal::pos_inf();
        return rng.uniform(-5.0, 5.0);
    };
    const auto a = pick(), b = pick(), c = pick();
    const double ab = integral(f, a, b), bc = integral(f, b, c), ac = integral(f, a, c);
    const double mag = std::max({1.0, std::abs(ab), std::abs(bc), std::abs(ac)});
    return {{"additivity", std::abs(ab + bc - ac) / mag, 1e-12},
            {"antisymmetry", std::abs(ab + integral(f, b, a)) / mag, 1e-12}};
}

inline std::vector<Check> translation(Rng& rng) {
    const auto f = random_distribution(rng);
    const double z = rng.uniform(-10.0, 10.0);
    return {{"isometry", std::abs(alexiewicz_norm(translate(f, z)) - alexiewicz_norm(f)), 1e-12}};
}

inline std::vector<Check> oracle_agreement(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto& F = f.primitive().rep();
    return {{"norm vs endpoint pairs", std::abs(alexiewicz_norm(f) - oracle_alexiewicz(F)), 1e-9},
            {"prime norm vs grid sup", std::abs(alexiewicz_norm_prime(f) - oracle_alexiewicz_prime(F)), 1e-9}};
}

inline std::vector<Check> uniqueness(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = make_distribution(f.primitive());
    return {{"round trip", g.primitive() == f.primitive() ? 0.0 : 1.0, 0.0}, {"approx equal", approx_equal(f, g) ? 0.0 : 1.0, 0.0}};
}

inline std::vector<Check> triangle(Rng& rng) {
    const auto f = random_distribution(rng), g = random_distribution(rng);
    const double sum = oracle_alexiewicz((f + g).primitive().rep());
    return {{"triangle", sum - alexiewicz_norm(f) - alexiewicz_norm(g), 1e-9}};
}

inline std::vector<Check> pairing_parts(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto phi = random_test_function(rng), psi = random_test_function(rng);
    // Oracle: integral of F' phi by quadrature, no integration by parts.
    const auto dF = f.primitive().rep().derivative();
    const auto grid = merge_grids(dF.breakpoints(), phi.rep().breakpoints());
    const double oracle = piecewise_quadrature([&](double x) { return dF(x) * phi.rep()(x); }, grid);
    const double lin = pairing(f, TestFunction(linear_combination(2.0, phi.rep(), -0.5, psi.rep()))) -
                       (2.0 * pairing(f, phi) - 0.5 * pairing(f, psi));
    return {{"parts vs quadrature", std::abs(pairing(f, phi) - oracle), 1e-10}, {"linear in phi", std::abs(lin), 1e-12}};
}

inline std::vector<Check> density(Rng& rng) {
    const auto f = rng.chance(0.2) ? translate(zigzag_distribution(rng.integer(2, 12)), rng.dyadic(-2.0, 2.0))
                                   : random_distribution(rng);
    std::vector<Check> out;
    for (double eps : {0.1, 0.01}) {
        const auto fn = approximate_by_l1(f, eps);
        out.push_back({"distance < 3 eps", alexiewicz_norm(fn - f) - 3.0 * eps, -1e-300});
        out.push_back({"piecewise-linear primitive", fn.primitive().rep().degree() <= 1 ? 0.0 : 1.0, 0.0});
    }
    return out;
}

// ---- bv_algebra ----------------------------------------------------------

inline std::vector<Check> variation_subadditivity(Rng& rng) {
    const auto g = random_bv(rng), h = random_bv(rng);
    return {{"V(g+h) <= Vg + Vh", variation(g + h) - variation(g) - variation(h), 1e-12}};
}

inline std::vector<Check> normalization(Rng& rng) {
    const auto g = random_bv(rng);
    const double gamma = rng.chance(0.5) ? rng.integer(0, 2) * 0.5 : rng.uniform(0.0, 1.0);
    const auto n = normalize(g, gamma);
    double off_breakpoints = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double x = rng.uniform(g.breakpoints().front() - 1.0, g.breakpoints().back() + 1.0);
        if (!std::binary_search(g.breakpoints().begin(), g.breakpoints().end(), x))
            off_breakpoints = std::max(off_breakpoints, std::abs(g(x) - n(x)));
    }
    return {{"a.e. equal", off_breakpoints, 0.0},
            {"same measure", measure_of(n) == measure_of(g) ? 0.0 : 1.0, 0.0},
            {"idempotent", normalize(n, gamma) == n ? 0.0 : 1.0, 0.0},
            {"variation does not grow", variation(n) - variation(g), 1e-12}};
}

inline std::vector<Check> ess_var_gamma(Rng& rng) {
    const auto g = random_bv(rng);
    const double v0 = variation(normalize(g, 0.0)), v5 = variation(normalize(g, 0.5)), v1 = essential_variation(g);
    return {{"gamma independent", std::max({std::abs(v0 - v1), std::abs(v5 - v1)}), 1e-12},
            {"ess var <= var", v1 - variation(g), 1e-12}};
}

inline std::vector<Check> measure_tv(Rng& rng) {
    const auto g = random_bv(rng);
    return {{"|mu_g| = ess var", std::abs(measure_of(g).total_variation() - essential_variation(g)), 1e-9}};
}

/// Oracle: sums |g(t_k) - g(t_{k-1})| over a fine partition through every
/// breakpoint, with one-sided limits approached at distance delta.
inline std::vector<Check> variation_oracle(Rng& rng) {
    const auto g = random_bv(rng);
    const auto& bp = g.breakpoints();
    const double delta = 1e-10;
    std::vector<double> t;
    for (std::size_t k = 0; k < bp.size(); ++k) {
        t.push_back(bp[k] - delta);
        t.push_back(bp[k]);
        t.push_back(bp[k] + delta);
        if (k + 1 < bp.size())
            for (int j = 1; j < 4000; ++j) t.push_back(bp[k] + (bp[k + 1] - bp[k]) * j / 4000.0);
    }
    std::sort(t.begin(), t.end());
    double sum = 0.0;
    for (std::size_t k = 1; k < t.size(); ++k) sum += std::abs(g(t[k]) - g(t[k - 1]));
    const double v = variation(g);
    return {{"partition sum <= V g", sum - v, 1e-8}, {"V g - partition sum", v - sum, 1e-6}};
}

// ---- stieltjes -----------------------------------------------------------

inline std::vector<Check> holder(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = random_bv(rng);
    const auto raw = holder_check(f, g);
    const auto ebv = holder_check_normalized(f, g, rng.uniform(0.0, 1.0));
    return {{"lhs <= tight", raw.lhs - raw.bound_tight, 1e-9},
            {"tight <= norm", raw.bound_tight - raw.bound_norm, 1e-9},
            {"normalized lhs <= tight", ebv.lhs - ebv.bound_tight, 1e-9},
            {"normalized tight <= norm", ebv.bound_tight - ebv.bound_norm, 1e-9}};
}

inline std::vector<Check> inf_abs_oracle(Rng& rng) {
    const auto g = random_bv(rng);
    const auto& bp = g.breakpoints();
    double m = std::min(std::abs(g.at_neg_inf()), std::abs(g.at_pos_inf()));
    for (std::size_t k = 0; k < bp.size(); ++k) {
        m = std::min({m, std::abs(g(bp[k])), std::abs(g(bp[k] - 1e-12)), std::abs(g.right_limit(k))});
        if (k + 1 < bp.size()) {
            double prev = g.right_limit(k);
            for (int j = 1; j <= 2000; ++j) {
                const double v = j == 2000 ? g.left_limit(k + 1) : g(bp[k] + (bp[k + 1] - bp[k]) * j / 2000.0);
                m = std::min(m, (prev < 0.0) != (v < 0.0) ? 0.0 : std::abs(v));
                prev = v;
            }
        }
    }
    const double exact = inf_abs(g);
    return {{"inf <= sampled min", exact - m, 1e-12}, {"sampled min - inf", m - exact, 1e-5}};
}

inline std::vector<Check> parts_consistency(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = random_continuous_bv(rng);
    const auto& F = f.primitive();
    const double oracle = F.at_infinity() * g.at_pos_inf() - oracle_stieltjes(F, g);
    return {{"parts vs Riemann-Stieltjes", std::abs(integrate_product(f, g) - oracle), 1e-8}};
}

inline std::vector<Check> gamma_independence(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = random_bv(rng);
    return {{"gamma 0 vs 1", std::abs(integrate_product(f, g, 0.0) - integrate_product(f, g, 1.0)), 0.0}};
}

inline std::vector<Check> bilinearity(Rng& rng) {
    const auto f1 = random_distribution(rng), f2 = random_distribution(rng);
    const auto g1 = random_bv(rng), g2 = random_bv(rng);
    const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
    const double in_f = integrate_product(linear_combine(a, f1, b, f2), g1);
    const double in_g = integrate_product(f1, linear_combine(a, g1, b, g2));
    return {{"linear in f", rel_diff(in_f, a * integrate_product(f1, g1) + b * integrate_product(f2, g1)), 1e-12},
            {"linear in g", rel_diff(in_g, a * integrate_product(f1, g1) + b * integrate_product(f1, g2)), 1e-12}};
}

inline std::vector<Check> atom_sum(Rng& rng) {
    const auto F = random_primitive(rng);
    const auto g = random_step(rng);
    double sum = 0.0;
    for (std::size_t k = 0; k < g.breakpoints().size(); ++k)
        sum += F(g.breakpoints()[k]) * (g.right_limit(k) - g.left_limit(k));
    return {{"weighted sum", std::abs(hs_integral(F, g) - sum), 0.0}};
}

inline std::vector<Check> hs_oracle(Rng& rng) {
    const auto F = random_primitive(rng);
    const auto g = random_bv(rng);
    return {{"hs vs Riemann-Stieltjes", std::abs(hs_integral(F, g) - oracle_stieltjes(F, g)), 1e-8}};
}

// ---- convolution ---------------------------------------------------------

inline std::vector<Check> step_kernel(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto& F = f.primitive();
    const auto h = convolve_bv(f, BVFunction::open_step());
    double worst = 0.0;
    for (double x : uniform_grid(F.rep().first() - 1.0, F.rep().last() + 1.0, 500))
        worst = std::max(worst, std::abs(h(x) - F(x)));
    return {{"f * step = F", worst, 1e-12}};
}

inline std::vector<Check> null_kernel(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto h = convolve_bv(f, BVFunction::point_indicator()).rep();
    double worst = std::max(std::abs(h.left_tail()), std::abs(h.right_tail()));
    for (const auto& p : h.pieces()) worst = std::max(worst, p.max_abs_coeff());
    return {{"f * point indicator = 0", worst, 0.0}};
}

inline std::vector<Check> constant_kernel(Rng& rng) {
    const auto f = random_distribution(rng);
    const double c = rng.chance(0.5) ? 1.0 : rng.uniform(-2.0, 2.0);
    const auto h = convolve_bv(f, BVFunction::constant(c)).rep();
    return {{"f * c = c int f", (h - PiecewisePolynomial::constant(c * integral(f), h.first())).sup_abs(), 1e-12}};
}

inline std::vector<Check> uniform_bound(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = random_bv(rng);
    const auto h = convolve_bv(f, g);
    const double sup = h.sup_abs(), nf = alexiewicz_norm(f), If = integral(f);
    const double tight = std::abs(If) * inf_abs(g) + nf * variation(g);
    return {{"sup <= tight", sup - tight, 1e-9},
            {"sup <= norm product", sup - nf * bv_norm(g), 1e-9},
            {"left tail", std::abs(h.at(ExtendedReal::neg_inf()) - g.at_neg_inf() * If), 1e-12},
            {"right tail", std::abs(h.at(ExtendedReal::pos_inf()) - g.at_pos_inf() * If), 1e-12}};
}

inline std::vector<Check> young(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = random_l1(rng, degree(2));
    return {{"||f*g|| <= ||f|| ||g||_1", alexiewicz_norm(convolve_l1(f, g)) - alexiewicz_norm(f) * l1_norm(g), 1e-9}};
}

inline std::vector<Check> commutativity(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = normalize(random_bv(rng));
    const auto h = convolve_bv(f, g);
    const auto& F = f.primitive().rep();
    const double lo = F.first() + g.breakpoints().front() - 1.0, hi = F.last() + g.breakpoints().back() + 1.0;
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double x = rng.uniform(lo, hi);
        worst = std::max(worst, std::abs(h(x) - oracle_convolve_reversed(f, g, x)));
    }
    return {{"f*g vs reversed Riemann-Stieltjes", worst, 1e-8}};
}

inline std::vector<Check> associativity(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = random_bv(rng, degree(1), true);
    const auto h = random_l1(rng, degree(1));
    const auto left = convolve_continuous(convolve_bv(f, g), h);
    const auto right = convolve_bv(f, BVFunction(convolve_functions(as_l1(g), h).rep()));
    const double lo = left.rep().first() - 1.0, hi = left.rep().last() + 1.0;
    double worst = 0.0;
    for (double x : uniform_grid(lo, hi, 200)) worst = std::max(worst, std::abs(left(x) - right(x)));
    return {{"(f*g)*h = f*(g*h)", worst, 1e-8}};
}

inline std::vector<Check> variation_young(Rng& rng) {
    const auto g = random_bv(rng, degree(2));
    const auto h = random_l1(rng, degree(2));
    const BVFunction gh(convolve_measure(g.rep(), SignedMeasure{h.rep(), {}}));
    const double bound = variation(g) * l1_norm(h);
    return {{"V(g*h) <= Vg ||h||_1", (variation(gh) - bound) / std::max(1.0, bound), 1e-12}};
}

inline std::vector<Check> translation_commute(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = random_bv(rng);
    const double z = rng.dyadic(-4.0, 4.0);
    const auto a = convolve_bv(f, g).rep().translated(z);
    const auto b = convolve_bv(translate(f, z), g).rep();
    const auto c = convolve_bv(f, g.translated(z)).rep();
    return {{"tau(f*g) = (tau f)*g", a == b ? 0.0 : std::max(coefficient_distance(a, b), 1e-300), 0.0},
            {"tau(f*g) = f*(tau g)", a == c ? 0.0 : std::max(coefficient_distance(a, c), 1e-300), 0.0}};
}

inline std::vector<Check> operator_norm(Rng& rng) {
    const auto f = random_distribution(rng);
    auto g = random_bv(rng);
    const double nb = bv_norm(g);
    std::vector<Check> out;
    if (nb > 0.0) {
        g = scaled(g, 1.0 / nb);
        out.push_back({"sup|f*g| <= ||f|| for ||g||_BV = 1", convolve_bv(f, g).sup_abs() - alexiewicz_norm(f), 1e-9});
    }
    const auto k = random_l1(rng, degree(2));
    const double n1 = l1_norm(k);
    if (n1 > 0.0) {
        const L1Function unit(k.rep().scaled(1.0 / n1));
        out.push_back({"||f*g|| <= ||f|| for ||g||_1 = 1", alexiewicz_norm(convolve_l1(f, unit)) - alexiewicz_norm(f), 1e-9});
    }
    return out;
}

inline std::vector<Check> equality_witness(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto h = convolve_bv(f, BVFunction::open_step());
    return {{"sup|f*step| = ||f||'", std::abs(h.sup_abs() - alexiewicz_norm_prime(f)), 0.0}};
}

inline std::vector<Check> derivative(Rng& rng) {
    const bool ramp = rng.chance(0.5);
    const auto f = random_distribution(rng, degree(ramp ? 2 : 3));
    const auto g = random_smooth_bv(rng, ramp);
    const auto h = convolve_bv(f, g);
    const auto d1 = convolve_derivative(f, g, 1);
    const auto d2 = convolve_derivative(f, g, 2);
    std::vector<Check> out{{"(f*g)' = f*g' on coefficients", coefficient_distance(h.rep().derivative(), d1.rep()), 1e-12}};
    const double step = 1e-4;
    const double scale = std::max(1e-300, d2.sup_abs());
    double worst = 0.0;
    for (double x : points_away_from(rng, h.rep().breakpoints(), h.rep().first(), h.rep().last(), 10, 2.0 * step)) {
        const double fd = (h(x + step) - 2.0 * h(x) + h(x - step)) / (step * step);
        worst = std::max(worst, std::abs(fd - d2(x)) / std::max(std::abs(d2(x)), scale));
    }
    out.push_back({"second difference vs f*g''", worst, 1e-6});
    return out;
}

inline std::vector<Check> primitive_identities(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = random_l1(rng, degree(2));
    const auto& F = f.primitive();
    const auto lhs = convolve_with_primitive_of(f, g);
    const auto rhs = convolve_primitive(F, g);
    std::vector<double> xs = merge_grids(lhs.rep().breakpoints(), rhs.rep().breakpoints());
    for (int k = 0; k < 20; ++k) xs.push_back(rng.uniform(xs.front() - 1.0, xs.back() + 1.0));
    double worst = 0.0;
    for (double x : xs) worst = std::max(worst, std::abs(lhs(x) - rhs(x)));
    // integral of f*g over [alpha, beta] with f*g the Lebesgue convolution of the density F'.
    double alpha = rng.uniform(xs.front() - 1.0, xs.back() + 1.0), beta = rng.uniform(xs.front() - 1.0, xs.back() + 1.0);
    if (alpha > beta) std::swap(alpha, beta);
    const auto fg = convolve_functions(L1Function(F.rep().derivative()), g);
    const double direct = fg.rep().integral(alpha, beta);
    const double via_primitive = rhs(beta) - rhs(alpha);
    return {{"f*G = F*g", worst, 1e-10},
            {"integral of f*g", std::abs(direct - via_primitive), 1e-10},
            {"integral via convolve_l1", std::abs(integral(convolve_l1(f, g), alpha, beta) - via_primitive), 1e-10}};
}

inline std::vector<Check> l1defn(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = random_l1(rng, degree(2));
    const auto terms = verify_l1defn_limit_terms(f, g, 6);
    double excess = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) excess = std::max(excess, t.distance - t.bound);
    const double target = 1e-3 * alexiewicz_norm(f) * l1_norm(g);
    return {{"term <= ||f|| ||g_n - g||_1", excess, 1e-9}, {"final term below target", terms.back().distance - target, 0.0}};
}

inline std::vector<Check> mollifier(Rng& rng) {
    const auto f = translate(tent_distribution(), rng.dyadic(-4.0, 4.0));
    const auto kernel = quadratic_bspline_kernel();
    double last = 0.0;
    for (int k = 0; k <= 8; ++k) last = alexiewicz_norm(mollify(f, kernel, std::ldexp(1.0, -k)) - f);
    return {{"unit mass", std::abs(kernel.integral() - 1.0), 0.0},
            {"C1 kernel", kernel.rep().max_jump(0) + kernel.rep().max_jump(1), 0.0},
            {"final distance below 0.01 ||f||", last - 0.01 * alexiewicz_norm(f), 0.0}};
}

inline std::vector<Check> pairing_equivalence(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = random_l1(rng, degree(2));
    const auto phi = random_test_function(rng);
    return {{"double integral vs pairing", std::abs(pairing_convolution(f, g, phi) - pairing(convolve_l1(f, g), phi)),
             1e-8}};
}

inline std::vector<Check> support(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = random_bv(rng, {}, true);
    const auto sh = support_of(convolve_bv(f, g));
    const auto sf = support_of(f);
    if (sh.empty) return {{"support rule", 0.0, 0.0}};
    if (sf.empty) return {{"support of zero convolution", 1.0, 0.0}};
    const double lo = sf.lo.value() + g.breakpoints().front(), hi = sf.hi.value() + g.breakpoints().back();
    if (!sh.lo.is_finite() || !sh.hi.is_finite()) return {{"bounded support", 1.0, 0.0}};
    return {{"support rule", std::max(lo - sh.lo.value(), sh.hi.value() - hi), 0.0}};
}

// ---- harness -------------------------------------------------------------

inline std::vector<Check> oracle_calibration(Rng& rng) {
    const auto f = random_distribution(rng);
    const auto g = random_bv(rng);
    const auto h = convolve_bv(f, g);
    OracleConfig cfg;
    cfg.tolerance = 1e-8;
    const auto& F = f.primitive().rep();
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
        const double x = rng.uniform(F.first() + g.breakpoints().front() - 1.0, F.last() + g.breakpoints().back() + 1.0);
        worst = std::max(worst, std::abs(oracle_convolve(f, g, x, cfg) - h(x)));
    }
    return {{"oracle vs exact", worst, cfg.tolerance}};
}

inline std::vector<Check> fubini(Rng& rng) {
    const auto f = random_distribution(rng);
    const bool compact = rng.chance(0.5);
    OracleConfig cfg;
    cfg.tolerance = 1e-8;
    FubiniResult r{};
    if (rng.chance(0.6)) {
        double alpha = rng.uniform(-5.0, 5.0), beta = rng.uniform(-5.0, 5.0);
        if (alpha > beta) std::swap(alpha, beta);
        if (alpha == beta) beta = alpha + 1.0;
        r = fubini_check(f, ShiftedWindowKernel{random_l1(rng, degree(2)), alpha, beta}, cfg, compact);
    } else {
        r = fubini_check(f, SeparableKernel{random_l1(rng), random_bv(rng)}, cfg, compact);
    }
    return {{compact ? "interchange (compact support)" : "interchange", std::abs(r.I1 - r.I2), cfg.tolerance}};
}

inline std::vector<Check> beta(Rng& rng) {
    const double xs[] = {0.25, 0.5, 1.0};
    const int c = rng.integer(0, 5);
    const double x = xs[c % 3];
    if (c < 3) return {{"alpha 1/2 gives pi", std::abs(oracle_power_convolution(0.5, x) - std::numbers::pi), 1e-6}};
    const double g4 = std::tgamma(0.25);
    const double expected = std::pow(x, -0.5) * g4 * g4 / std::tgamma(0.5);
    return {{"alpha 3/4 closed form", std::abs(oracle_power_convolution(0.75, x) - expected), 1e-5}};
}

inline std::vector<Check> sinlog(Rng& rng) {
    const auto v = oracle_sin_log(rng.uniform(2.5, 12.0));
    return {{"direct vs by parts", std::abs(v.direct - v.by_parts), 1e-6}};
}

} // namespace detail

inline const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {
        {"norm_equivalence", "||f||' <= ||f|| <= 2||f||'", detail::norm_equivalence},
        {"additivity", "interval additivity and antisymmetry of the integral", detail::additivity},
        {"translation", "translation preserves the Alexiewicz norm", detail::translation},
        {"oracle_agreement", "norms vs the endpoint-pair oracle", detail::oracle_agreement},
        {"uniqueness", "distribution <-> primitive round trip", detail::uniqueness},
        {"triangle", "triangle inequality via the oracle norm of the sum", detail::triangle},
        {"pairing_parts", "pairing vs quadrature of F' phi; linearity in phi", detail::pairing_parts},
        {"density", "approximation by integrable functions within 3 eps", detail::density},
        {"variation_subadditivity", "V(g+h) <= Vg + Vh", detail::variation_subadditivity},
        {"normalization", "normalisation is a.e.-preserving, measure-preserving, idempotent", detail::normalization},
        {"ess_var_gamma", "essential variation is independent of gamma", detail::ess_var_gamma},
        {"measure_tv", "total variation of mu_g equals the essential variation", detail::measure_tv},
        {"variation_oracle", "variation vs fine partition sums", detail::variation_oracle},
        {"holder", "Hoelder inequalities, raw and normalised", detail::holder},
        {"inf_abs", "inf |g| vs a sampled minimum", detail::inf_abs_oracle},
        {"parts_consistency", "integration by parts vs Riemann-Stieltjes sums", detail::parts_consistency},
        {"gamma_independence", "product integral independent of gamma", detail::gamma_independence},
        {"bilinearity", "product integral is bilinear", detail::bilinearity},
        {"atom_sum", "integral against a step function is a weighted sum", detail::atom_sum},
        {"hs_oracle", "Stieltjes integral vs Riemann-Stieltjes sums", detail::hs_oracle},
        {"step_kernel", "f * chi_(0,inf) = F", detail::step_kernel},
        {"null_kernel", "f * chi_{0} = 0", detail::null_kernel},
        {"constant_kernel", "f * c = c int f", detail::constant_kernel},
        {"uniform_bound", "sup norm bounds and tails of f*g", detail::uniform_bound},
        {"young", "||f*g|| <= ||f|| ||g||_1", detail::young},
        {"commutativity", "f*g vs the reversed-order oracle", detail::commutativity},
        {"associativity", "(f*g)*h = f*(g*h)", detail::associativity},
        {"variation_young", "V(g*h) <= Vg ||h||_1", detail::variation_young},
        {"translation_commute", "translations commute with convolution exactly", detail::translation_commute},
        {"operator_norm", "convolution operator norm bounds", detail::operator_norm},
        {"equality_witness", "sup |f * chi_(0,inf)| = ||f||'", detail::equality_witness},
        {"derivative", "(f*g)^(n) = f*g^(n)", detail::derivative},
        {"primitive_identities", "f*G = F*g and integrals of f*g", detail::primitive_identities},
        {"l1defn", "step-function limit definition of f*g", detail::l1defn},
        {"mollifier", "f * g_t -> f for a unit-mass kernel", detail::mollifier},
        {"pairing", "double-integral pairing vs pairing of f*g", detail::pairing_equivalence},
        {"support", "supp(f*g) within supp f + supp g", detail::support},
        {"oracle_calibration", "Riemann-Stieltjes oracle vs exact convolution", detail::oracle_calibration},
        {"fubini", "interchange of iterated integrals", detail::fubini},
        {"beta", "power-law convolution vs its closed form", detail::beta},
        {"sinlog", "sin/log tail integral vs its integrated-by-parts form", detail::sinlog},
    };
    return all;
}

inline const Suite& find_suite(const std::string& name) {
    for (const auto& s : suites())
        if (s.name == name) return s;
    throw InputError("unknown suite '" + name + "'");
}

/// Runs `trials` trials of the named suite, trial i seeded by mix_seed(seed, i).
/// Trials run on up to `threads` workers (0: hardware concurrency).
inline PropertyReport run_suite(const std::string& name, std::uint64_t seed, std::size_t trials,
                                unsigned threads = 0) {
    const Suite& suite = find_suite(name);
    struct Outcome {
        std::vector<Check> checks;
        std::optional<std::string> error;
    };
    std::vector<Outcome> outcomes(trials);
    const auto start = std::chrono::steady_clock::now();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < trials; i = next++) {
            Rng rng(mix_seed(seed, i));
            try {
                outcomes[i].checks = suite.trial(rng);
            } catch (const std::exception& e) {
                outcomes[i].error = e.what();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    PropertyReport report;
    report.suite = name;
    report.trials = trials;
    report.seed = seed;
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < trials; ++i) {
        bool failed = false;
        std::string why;
        if (outcomes[i].error) {
            failed = true;
            why = "error: " + *outcomes[i].error;
        }
        for (const auto& c : outcomes[i].checks) {
            if (std::isfinite(c.value)) worst = std::max(worst, c.value);
            if (!(c.value <= c.tolerance)) {
                if (!failed) why = c.label + " = " + std::to_string(c.value) + " > " + std::to_string(c.tolerance);
                failed = true;
            }
        }
        if (failed) {
            ++report.failures;
            if (!report.first_failure) report.first_failure = "trial " + std::to_string(i) + ": " + why;
        }
    }
    report.worst_slack = std::isfinite(worst) ? worst : 0.0;
    report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Every suite with the same seed and trial count.
inline std::vector<PropertyReport> run_all(std::uint64_t seed, std::size_t trials, unsigned threads = 0) {
    std::vector<PropertyReport> out;
    for (const auto& s : suites()) out.push_back(run_suite(s.name, seed, trials, threads));
    return out;
}

/// A random value of the given kind, serialised in the shared file schema.
inline nlohmann::json random_instance(const std::string& kind, std::uint64_t seed, const InstanceParams& params = {}) {
    if (params.max_pieces < 1 || params.max_degree < 0 || !(params.min_length > 0.0) ||
        !(params.max_length >= params.min_length) || !(params.window > 0.0))
        throw InputError("invalid instance parameters");
    Rng rng(seed);
    if (kind == "primitive") return io::to_json(random_primitive(rng, params));
    if (kind == "bv") return io::to_json(random_bv(rng, params));
    if (kind == "l1") return io::to_json(random_l1(rng, params));
    if (kind == "test") return io::to_json(random_test_function(rng));
    throw InputError("unknown instance kind '" + kind + "'");
}

} // namespace cpint::harness
