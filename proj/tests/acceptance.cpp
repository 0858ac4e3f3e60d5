// Acceptance run: every criterion at its stated scale and tolerance, one
// PASS/FAIL line each. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "cpint/harness/suites.hpp"

namespace {

using namespace cpint;
using namespace cpint::harness;

constexpr std::uint64_t kSeed = 20240607;

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome from_suites(const std::vector<std::pair<std::string, std::size_t>>& runs) {
    Outcome out{true, ""};
    for (const auto& [name, trials] : runs) {
        const auto r = run_suite(name, kSeed, trials);
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s%s: %zu/%zu failed, worst %.3g", out.detail.empty() ? "" : "; ",
                      name.c_str(), r.failures, r.trials, r.worst_slack);
        out.detail += buf;
        if (r.failures != 0) {
            out.pass = false;
            out.detail += " [" + r.first_failure.value_or("") + "]";
        }
    }
    return out;
}

Outcome mollifier_on_tent() {
    const auto f = tent_distribution();
    const auto kernel = quadratic_bspline_kernel();
    std::string seq;
    double last = 0.0;
    for (int k = 0; k <= 8; ++k) {
        last = alexiewicz_norm(mollify(f, kernel, std::ldexp(1.0, -k)) - f);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%s%.2e", k ? " " : "", last);
        seq += buf;
    }
    const bool kernel_ok = kernel.integral() == 1.0 && kernel.rep().max_jump(0) == 0.0 && kernel.rep().max_jump(1) == 0.0;
    return {kernel_ok && last < 0.01 * alexiewicz_norm(f), "distances " + seq};
}

Outcome beta_example() {
    Outcome out{true, ""};
    double worst_half = 0.0, worst_three_quarters = 0.0;
    const double g4 = std::tgamma(0.25);
    for (double x : {0.25, 0.5, 1.0}) {
        worst_half = std::max(worst_half, std::abs(oracle_power_convolution(0.5, x) - std::numbers::pi));
        const double expected = std::pow(x, -0.5) * g4 * g4 / std::tgamma(0.5);
        worst_three_quarters = std::max(worst_three_quarters, std::abs(oracle_power_convolution(0.75, x) - expected));
    }
    out.pass = worst_half <= 1e-6 && worst_three_quarters <= 1e-5;
    char buf[128];
    std::snprintf(buf, sizeof buf, "alpha 1/2 error %.2e, alpha 3/4 error %.2e", worst_half, worst_three_quarters);
    out.detail = buf;
    return out;
}

struct Criterion {
    const char* title;
    double time_limit; // seconds; 0 for none
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"step-kernel identity f*chi(0,inf) = F", 5.0, [] { return from_suites({{"step_kernel", 100}}); }},
        {"null kernel f*chi{0} = 0", 0.0, [] { return from_suites({{"null_kernel", 100}}); }},
        {"constant kernel f*1 = int f", 0.0, [] { return from_suites({{"constant_kernel", 100}}); }},
        {"Hoelder inequalities", 0.0, [] { return from_suites({{"holder", 1000}}); }},
        {"uniform-norm bound and tails", 0.0, [] { return from_suites({{"uniform_bound", 1000}}); }},
        {"Young-type bound", 0.0, [] { return from_suites({{"young", 1000}}); }},
        {"commutativity and associativity", 0.0,
         [] { return from_suites({{"commutativity", 100}, {"associativity", 50}}); }},
        {"translation commutes exactly", 0.0, [] { return from_suites({{"translation_commute", 100}}); }},
        {"derivative of a convolution", 0.0, [] { return from_suites({{"derivative", 50}}); }},
        {"primitive identities", 0.0, [] { return from_suites({{"primitive_identities", 100}}); }},
        {"step-function limit definition", 0.0, [] { return from_suites({{"l1defn", 50}}); }},
        {"mollifier convergence", 10.0, mollifier_on_tent},
        {"power-law (beta) example", 30.0, beta_example},
        {"Fubini interchange", 0.0, [] { return from_suites({{"fubini", 200}}); }},
        {"pairing equivalence", 0.0, [] { return from_suites({{"pairing", 50}}); }},
        {"density of integrable functions", 0.0, [] { return from_suites({{"density", 50}}); }},
        {"equality witness sup|f*step| = ||f||'", 0.0, [] { return from_suites({{"equality_witness", 100}}); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = o.pass;
        if (c.time_limit > 0.0 && secs >= c.time_limit) {
            pass = false;
            o.detail += "; runtime limit exceeded";
        }
        if (!pass) ++failed;
        std::printf("criterion %2zu %-42s %s  (%.2f s) %s\n", i + 1, c.title, pass ? "PASS" : "FAIL", secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
