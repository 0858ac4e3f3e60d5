// cpint: command-line front end for the continuous primitive integral library.
//
// Exit status: 0 success, 1 check failures (or a non-converging oracle),
// 2 input error.

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpint/convolution.hpp"
#include "cpint/harness/oracles.hpp"
#include "cpint/harness/suites.hpp"
#include "cpint/io.hpp"

namespace {

using namespace cpint;

constexpr int kExitFailures = 1;
constexpr int kExitInput = 2;

void print_value(double v) { std::printf("%.17g\n", v); }

double parse_finite(const std::string& text, const char* what) {
    const auto x = ExtendedReal::parse(text);
    if (!x.is_finite()) throw InputError(std::string(what) + " must be finite");
    return x.value();
}

struct Grid {
    double lo, hi, step;
};

/// LO:HI:STEP, closed at both ends.
Grid parse_grid(const std::string& text) {
    const auto a = text.find(':');
    const auto b = a == std::string::npos ? a : text.find(':', a + 1);
    if (b == std::string::npos || text.find(':', b + 1) != std::string::npos)
        throw InputError("--grid must be LO:HI:STEP");
    Grid g{parse_finite(text.substr(0, a), "grid LO"), parse_finite(text.substr(a + 1, b - a - 1), "grid HI"),
           parse_finite(text.substr(b + 1), "grid STEP")};
    if (!(g.step > 0.0) || g.hi < g.lo) throw InputError("--grid needs LO <= HI and STEP > 0");
    if ((g.hi - g.lo) / g.step > 1e7) throw InputError("--grid has too many points");
    return g;
}

void write_samples(const std::string& path, const Grid& grid, const ExtendedContinuousFunction& h) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    const auto n = static_cast<long>(std::floor((grid.hi - grid.lo) / grid.step * (1.0 + 1e-12)));
    char line[96];
    out << "x,value\n";
    for (long k = 0; k <= n; ++k) {
        const double x = k == n && std::abs(grid.lo + n * grid.step - grid.hi) <= 1e-9 * grid.step
                             ? grid.hi
                             : grid.lo + static_cast<double>(k) * grid.step;
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", x, h(x));
        out << line;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continuous primitive integral: integrals, norms, variation, convolution and property checks"};
    app.require_subcommand(1);

    std::string f_path, g_path, phi_path, out_path, sample_path, grid_text, a_text, b_text, t_text, x_text;
    std::string suite_name, report_path, kind;
    bool prime = false, essential = false;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    double tol = 1e-10;

    auto* integrate = app.add_subcommand("integrate", "integral of f over [a, b]; a, b may be -inf or inf");
    integrate->add_option("--f", f_path, "primitive file")->required();
    integrate->add_option("--a", a_text, "lower limit")->required()->allow_extra_args(false);
    integrate->add_option("--b", b_text, "upper limit")->required()->allow_extra_args(false);

    auto* norm = app.add_subcommand("norm", "Alexiewicz norm of f");
    norm->add_option("--f", f_path, "primitive file")->required();
    norm->add_flag("--prime", prime, "the equivalent norm sup |F|");

    auto* var = app.add_subcommand("variation", "variation of g");
    var->add_option("--g", g_path, "bv or l1 file")->required();
    var->add_flag("--essential", essential, "essential variation");

    auto* conv = app.add_subcommand("convolve", "f*g for g of bounded variation (bv or l1 file)");
    conv->add_option("--f", f_path, "primitive file")->required();
    conv->add_option("--g", g_path, "bv or l1 file")->required();
    conv->add_option("--out", out_path, "output function file")->required();
    auto* sample_opt = conv->add_option("--sample", sample_path, "CSV of sampled values");
    conv->add_option("--grid", grid_text, "sampling grid LO:HI:STEP")->needs(sample_opt);
    sample_opt->needs(conv->get_option("--grid"));

    auto* moll = app.add_subcommand("mollify", "f * g_t with g_t(x) = g(x/t)/t");
    moll->add_option("--f", f_path, "primitive file")->required();
    moll->add_option("--g", g_path, "l1 kernel file")->required();
    moll->add_option("--t", t_text, "scale t > 0")->required();
    moll->add_option("--out", out_path, "output primitive file (default: stdout)");

    auto* pair = app.add_subcommand("pair", "distributional pairing <f, phi>");
    pair->add_option("--f", f_path, "primitive file")->required();
    pair->add_option("--phi", phi_path, "test function file")->required();

    auto* check = app.add_subcommand("check", "run a property suite (or all)");
    check->add_option("--suite", suite_name, "suite name or 'all'")->required();
    check->add_option("--seed", seed, "seed")->required();
    check->add_option("--trials", trials, "trials per suite")->required();
    check->add_option("--report", report_path, "JSON report")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force oracles");
    oracle->require_subcommand(1);
    auto* oconv = oracle->add_subcommand("convolve", "f*g(x) by refined Riemann-Stieltjes sums");
    oconv->add_option("--f", f_path, "primitive file")->required();
    oconv->add_option("--g", g_path, "bv or l1 file")->required();
    oconv->add_option("--x", x_text, "point")->required();
    oconv->add_option("--tol", tol, "refinement tolerance");

    auto* random = app.add_subcommand("random", "write a seeded random instance");
    random->add_option("--kind", kind, "primitive | bv | l1 | test")->required();
    random->add_option("--seed", seed, "seed")->required();
    random->add_option("--out", out_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*integrate) {
            const auto f = io::distribution_from(io::load(f_path));
            print_value(integral(f, ExtendedReal::parse(a_text), ExtendedReal::parse(b_text)));
        } else if (*norm) {
            const auto f = io::distribution_from(io::load(f_path));
            print_value(prime ? alexiewicz_norm_prime(f) : alexiewicz_norm(f));
        } else if (*var) {
            const auto g = io::bv_from(io::load(g_path));
            print_value(essential ? essential_variation(g) : variation(g));
        } else if (*conv) {
            const auto f = io::distribution_from(io::load(f_path));
            const auto g = io::bv_from(io::load(g_path));
            std::optional<Grid> grid;
            if (!sample_path.empty()) grid = parse_grid(grid_text);
            const auto h = convolve_bv(f, g);
            io::write_json(out_path, io::to_json(h));
            if (grid) write_samples(sample_path, *grid, h);
        } else if (*moll) {
            const auto f = io::distribution_from(io::load(f_path));
            const auto g = io::l1_from(io::load(g_path));
            const auto r = io::to_json(mollify(f, g, parse_finite(t_text, "--t")));
            if (out_path.empty()) std::cout << r.dump(2) << '\n';
            else io::write_json(out_path, r);
        } else if (*pair) {
            const auto f = io::distribution_from(io::load(f_path));
            const auto phi = io::test_from(io::load(phi_path));
            print_value(pairing(f, phi));
        } else if (*check) {
            std::vector<harness::PropertyReport> reports;
            if (suite_name == "all") reports = harness::run_all(seed, trials);
            else reports.push_back(harness::run_suite(suite_name, seed, trials));
            nlohmann::json out = nlohmann::json::array();
            std::size_t failures = 0;
            for (const auto& r : reports) {
                out.push_back(r.to_json());
                failures += r.failures;
                std::printf("%-24s %s  trials=%zu failures=%zu worst_slack=%.3g\n", r.suite.c_str(),
                            r.failures == 0 ? "PASS" : "FAIL", r.trials, r.failures, r.worst_slack);
            }
            io::write_json(report_path, suite_name == "all" ? nlohmann::json{{"reports", out}} : out.at(0));
            return failures == 0 ? 0 : kExitFailures;
        } else if (*oconv) {
            const auto f = io::distribution_from(io::load(f_path));
            const auto g = io::bv_from(io::load(g_path));
            harness::OracleConfig cfg;
            cfg.tolerance = tol;
            print_value(harness::oracle_convolve(f, g, parse_finite(x_text, "--x"), cfg));
        } else if (*random) {
            io::write_json(out_path, harness::random_instance(kind, seed));
        }
    } catch (const harness::OracleError& e) {
        std::cerr << "cpint: " << e.what() << '\n';
        return kExitFailures;
    } catch (const std::invalid_argument& e) {
        std::cerr << "cpint: " << e.what() << '\n';
        return kExitInput;
    } catch (const DegreeOverflow& e) {
        std::cerr << "cpint: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "cpint: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
