// Command-line pipeline: twist-knot reports via the exact reduction,
// two-bridge degree bounds, and generic solves of triangulation fixtures.
//
// Exit codes: 0 success, 1 solver failure, 2 usage or format error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotvol/diagram.hpp"
#include "knotvol/errors.hpp"
#include "knotvol/report.hpp"
#include "knotvol/solver.hpp"
#include "knotvol/volume.hpp"

namespace {

using namespace knotvol;

struct CommonOptions {
    SolverConfig config;
    std::string out_path;
};

void add_solver_options(CLI::App* cmd, CommonOptions* opts) {
    cmd->add_option("--attempts", opts->config.attempts,
                    "multi-start attempts for the generic solver")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", opts->config.seed, "random seed for solver starts")
        ->capture_default_str();
    cmd->add_option("--tol-essential", opts->config.tol_essential,
                    "distance from {0,1,inf} below which a shape is non-essential")
        ->capture_default_str();
    cmd->add_option("--tol-dedup", opts->config.tol_dedup,
                    "max-norm distance identifying two solutions")
        ->capture_default_str();
    cmd->add_option("--out", opts->out_path, "write the JSON report to this file");
}

int emit(const VolumeReport& report, const ReportMeta& meta, const std::string& out_path) {
    std::cout << report_table(report, meta);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        out << report_json(report, meta);
    }
    return 0;
}

// Every essential solution of one set must appear in the other within tol.
bool essential_sets_match(const SolutionSet& a, const SolutionSet& b, double tol) {
    auto covered = [tol](const SolutionSet& from, const SolutionSet& in) {
        for (const Solution& s : from.solutions) {
            if (!s.essential) continue;
            bool hit = false;
            for (const Solution& t : in.solutions) {
                if (t.essential && (s.z - t.z).lpNorm<Eigen::Infinity>() < tol) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

int run_twist(int n, const CommonOptions& opts, bool cross_check) {
    PotentialFunction v = assemble(twist_knot_triangulation(n));
    TwistReduction reduction = twist_reduce(n);
    SolutionSet set = solve_twist_exact(v, reduction, opts.config);
    if (cross_check) {
        SolutionSet generic = solve_generic(v, opts.config);
        if (!essential_sets_match(set, generic, opts.config.tol_dedup)) {
            std::cerr << "error: generic solver disagrees with the exact reduction\n";
            return 1;
        }
        std::cout << "cross-check: generic solver matches the exact reduction ("
                  << count_essential(generic) << " essential)\n";
    }
    VolumeReport report = build_report(v, std::move(set), opts.config.tol_dedup);
    report.bound_two_bridge = two_bridge_bound({2, static_cast<long long>(n) + 1});
    ReportMeta meta{"twist", std::to_string(n), "exact-twist", opts.config};
    return emit(report, meta, opts.out_path);
}

int run_fixture(const std::string& path, const CommonOptions& opts) {
    PotentialFunction v = assemble(load_triangulation(path));
    SolutionSet set = solve_generic(v, opts.config);
    VolumeReport report = build_report(v, std::move(set), opts.config.tol_dedup);
    ReportMeta meta{"fixture", path, "generic", opts.config};
    return emit(report, meta, opts.out_path);
}

int run_twobridge(const std::vector<long long>& a, const std::string& out_path) {
    BigInt alpha = two_bridge_alpha(a);
    BigInt bound = (alpha - 1) / 2;
    std::ostringstream list;
    for (size_t i = 0; i < a.size(); ++i) list << (i ? "," : "") << a[i];
    std::cout << "C(" << list.str() << "): alpha = " << alpha.str()
              << ", degree bound = " << bound.str() << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        out << "{\n  \"command\": \"twobridge\",\n  \"a\": [" << list.str() << "],\n"
            << "  \"alpha\": \"" << alpha.str() << "\",\n  \"bound\": \"" << bound.str()
            << "\"\n}\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complex volumes, Borel regulator components and trace-field degree bounds\n"
                 "of hyperbolic knots from dilogarithm potential functions"};
    app.require_subcommand(1);

    CommonOptions twist_opts;
    int twist_n = 0;
    bool cross_check = false;
    CLI::App* twist = app.add_subcommand("twist", "solve the twist knot C(2, n+1) exactly");
    twist->add_option("--n", twist_n, "number of contributing sides (>= 1)")
        ->required()
        ->check(CLI::Range(1, 1000000));
    twist->add_flag("--cross-check", cross_check,
                    "also run the generic solver and compare essential sets");
    add_solver_options(twist, &twist_opts);

    std::vector<long long> conway;
    std::string twobridge_out;
    CLI::App* twobridge =
        app.add_subcommand("twobridge", "degree bound for the 2-bridge link C(a1,...,am)");
    twobridge->add_option("a", conway, "Conway notation entries (a1 a2 ...)")
        ->required()
        ->expected(-2);
    twobridge->add_option("--out", twobridge_out, "write the JSON result to this file");

    CommonOptions fixture_opts;
    std::string fixture_path;
    CLI::App* fixture =
        app.add_subcommand("fixture", "solve a triangulation fixture with the generic solver");
    fixture->add_option("path", fixture_path, "fixture file")->required();
    add_solver_options(fixture, &fixture_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (twist->parsed()) return run_twist(twist_n, twist_opts, cross_check);
        if (twobridge->parsed()) return run_twobridge(conway, twobridge_out);
        if (fixture->parsed()) return run_fixture(fixture_path, fixture_opts);
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
