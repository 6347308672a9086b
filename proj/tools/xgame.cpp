// Command-line front end: threshold constants, GF(2) solving, instance
// sampling, 2-core peeling, bound-function tables, Monte Carlo sweeps,
// enumeration checks and interval certifications.
//
// Exit codes: 0 success, 1 failed check/certification, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xorgame/bounds.hpp"
#include "xorgame/certify.hpp"
#include "xorgame/constants.hpp"
#include "xorgame/gf2.hpp"
#include "xorgame/instance.hpp"
#include "xorgame/peeling.hpp"
#include "xorgame/sweep.hpp"

namespace {

using namespace xorgame;

std::string fmt(double v, const char* spec = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

int cmd_constants(int K, bool as_json) {
    const ConstantsBundle b = compute_constants(K);
    if (as_json) {
        std::cout << "{\n"
                  << "  \"K\": " << b.K << ",\n"
                  << "  \"lambda\": " << fmt(b.lambda_K) << ",\n"
                  << "  \"c_star\": " << fmt(b.c_star) << ",\n"
                  << "  \"tilde_mu\": " << fmt(b.tilde_mu) << ",\n"
                  << "  \"tilde_c\": " << fmt(b.tilde_c) << ",\n"
                  << "  \"beta\": " << fmt(b.beta) << ",\n"
                  << "  \"alpha_k\": " << fmt(b.alpha_k) << ",\n"
                  << "  \"alpha_star\": " << fmt(b.alpha_star) << "\n}\n";
    } else {
        std::cout << "K          = " << b.K << "\n"
                  << "lambda     = " << fmt(b.lambda_K) << "\n"
                  << "c_star     = " << fmt(b.c_star) << "\n"
                  << "tilde_mu   = " << fmt(b.tilde_mu) << "\n"
                  << "tilde_c    = " << fmt(b.tilde_c) << "\n"
                  << "beta       = " << fmt(b.beta) << "\n"
                  << "alpha_k    = " << fmt(b.alpha_k) << "\n"
                  << "alpha_star = " << fmt(b.alpha_star) << "\n";
    }
    return 0;
}

int cmd_solve(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "solve: cannot open " << path << "\n";
        return 2;
    }
    BitMatrix m;
    BitVec s;
    read_system(in, m, s);
    const auto x = solve(m, s);
    if (!x) {
        std::cout << "UNSAT\n";
        return 0;
    }
    std::string bits(static_cast<std::size_t>(m.cols()), '0');
    for (int j = 0; j < m.cols(); ++j)
        if (x->get(j)) bits[static_cast<std::size_t>(j)] = '1';
    std::cout << "SAT " << bits << "\n";
    return 0;
}

int cmd_sample(int K, int n, int m, std::uint64_t seed, const std::string& out_path) {
    Rng rng(seed);
    const GameInstance inst = sample_game(m, BlockShape::uniform(K, n), rng);
    if (out_path.empty()) {
        write_system(std::cout, inst.gamma, inst.s);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "sample: cannot open " << out_path << "\n";
            return 2;
        }
        write_system(out, inst.gamma, inst.s);
    }
    return 0;
}

int cmd_peel(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "peel: cannot open " << path << "\n";
        return 2;
    }
    BitMatrix m;
    BitVec s;
    read_system(in, m, s);
    const CoreResult core = two_core(m);
    std::cout << "core_m " << core.report.core_m << "\n";
    std::cout << "core_n " << core.report.kept_cols.size() << "\n";
    std::cout << "kept_rows";
    for (int r : core.report.kept_rows) std::cout << ' ' << r;
    std::cout << "\nkept_cols";
    for (int c : core.report.kept_cols) std::cout << ' ' << c;
    std::cout << "\n";
    return 0;
}

int cmd_bounds(int K, double c, const std::string& curve_name, int grid) {
    ZetaCurve curve = ZetaCurve::lin();
    if (curve_name == "sqrt") {
        curve = ZetaCurve::sqrt_curve(K);
    } else if (curve_name == "hat") {
        const TailSearchResult tail = tail_delta_search(K, c);
        if (!tail.found) {
            std::cerr << "bounds: tail search exhausted its ladder for K=" << K << " c=" << c << "\n";
            return 1;
        }
        curve = ZetaCurve::hat(K, c, tail.delta_hat);
    } else if (curve_name != "lin") {
        std::cerr << "bounds: unknown curve " << curve_name << "\n";
        return 2;
    }
    const Density d = Density::from_c(c);
    std::cout << "alpha,J,L\n";
    for (int i = 1; i < grid; ++i) {
        const double alpha = static_cast<double>(i) / grid;
        const double j = j_K(alpha, curve(alpha), d, K);
        const double l = l_K(alpha, c, K);
        std::cout << fmt(alpha, "%.8f") << ',' << fmt(j) << ',' << fmt(l) << "\n";
    }
    return 0;
}

int cmd_sweep(int K, int n, const std::string& c_csv, int trials, std::uint64_t seed, int parallel,
              const std::string& out_path) {
    std::vector<double> c_list;
    std::stringstream ss(c_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) c_list.push_back(std::stod(tok));
    if (c_list.empty()) {
        std::cerr << "sweep: empty c list\n";
        return 2;
    }
    const SweepSummary s = run_sweep(K, n, c_list, trials, seed, parallel);
    const std::string csv = sweep_to_csv(s);
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        out << csv;
    }
    for (const SweepPoint& p : s.points)
        if (p.c <= 2.0)
            std::cerr << "note: c=" << fmt(p.c)
                      << " is below the analyzed density range (c > 2); results are raw samples\n";
    return 0;
}

int cmd_core_stats(int K, int n, double c, int trials, std::uint64_t seed, const std::string& out_path) {
    const CoreStats s = run_core_stats(K, n, c, trials, seed);
    const std::string csv = core_stats_to_csv(s);
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        out << csv;
    }
    if (s.predicted_empty)
        std::cerr << "note: c <= tilde_c(" << K << "), 2-core empty asymptotically almost surely\n";
    return 0;
}

int cmd_checks() {
    const EnumerationChecks c = run_enumeration_checks();
    std::cout << enumeration_checks_to_text(c);
    const StirlingScan scan = stirling_bound_scan(1000);
    const bool stirling_ok = scan.sup_ratio <= 3.0;
    std::cout << (stirling_ok ? "PASS" : "FAIL") << " binomial reciprocal bound, sup ratio "
              << fmt(scan.sup_ratio) << " at m=" << scan.arg_m << " l=" << scan.arg_ell << "\n";
    return (c.all_pass() && stirling_ok) ? 0 : 1;
}

int cmd_certify(const std::string& region, int K, double c, int threads, const std::string& json_path) {
    CertificationReport rep;
    if (region == "lk4")
        rep = certify_lk_grid(4, 25, -1e-4, threads);
    else if (region == "lk5")
        rep = certify_lk_grid(5, 25, -1e-4, threads);
    else if (region == "lk6")
        rep = certify_lk_grid(6, 25, -1e-4, threads);
    else if (region == "2a")
        rep = certify_region_2a(200, 200, threads);
    else if (region == "2b")
        rep = certify_region_2b(400, 400, threads);
    else if (region == "3")
        rep = certify_region_3(40, 40, threads);
    else if (region == "kgeq7")
        rep = certify_k_geq_7();
    else if (region == "beta")
        rep = certify_beta_bounds();
    else if (region == "tail") {
        const TailSearchResult tail = tail_delta_search(K, c);
        if (!tail.found) {
            std::cerr << "certify: tail ladder exhausted for K=" << K << " c=" << c << "\n";
            return 1;
        }
        std::cout << "tail search: delta_hat=" << fmt(tail.delta_hat) << " eps_hat=" << fmt(tail.eps_hat)
                  << " ladder_steps=" << tail.ladder_steps << "\n";
        rep = certify_tail(K, c, tail.delta_hat, tail.eps_hat);
    } else {
        std::cerr << "certify: unknown region " << region << "\n";
        return 2;
    }
    std::cout << rep.canonical_text() << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << rep.to_json();
    }
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random K-XORGAME threshold toolkit"};
    app.require_subcommand(1);

    int K = 3, n = 100, m = 0, trials = 100, parallel = 1, grid = 100;
    double c = 2.5;
    std::uint64_t seed = 1;
    std::string input, output, json_path, c_csv = "2.5", curve = "lin", region;
    bool as_json = false;

    auto* sc_const = app.add_subcommand("constants", "threshold constants for one K");
    sc_const->add_option("--K", K, "number of blocks")->required();
    sc_const->add_flag("--json", as_json, "emit JSON");

    auto* sc_solve = app.add_subcommand("solve", "solve a GF(2) system from a text file");
    sc_solve->add_option("--input", input, "system file")->required();

    auto* sc_sample = app.add_subcommand("sample", "sample a K-XORGAME instance");
    sc_sample->add_option("--K", K)->required();
    sc_sample->add_option("--n", n, "columns per block")->required();
    sc_sample->add_option("--m", m, "rows")->required();
    sc_sample->add_option("--seed", seed);
    sc_sample->add_option("--out", output);

    auto* sc_peel = app.add_subcommand("peel", "2-core of a system from a text file");
    sc_peel->add_option("--input", input)->required();

    auto* sc_bounds = app.add_subcommand("bounds", "CSV table of J and L along a zeta curve");
    sc_bounds->add_option("--K", K)->required();
    sc_bounds->add_option("--c", c)->required();
    sc_bounds->add_option("--curve", curve, "lin|sqrt|hat");
    sc_bounds->add_option("--alpha-grid", grid, "number of alpha samples");

    auto* sc_sweep = app.add_subcommand("sweep", "Monte Carlo satisfiability sweep");
    sc_sweep->add_option("--K", K)->required();
    sc_sweep->add_option("--n", n)->required();
    sc_sweep->add_option("--c", c_csv, "comma-separated densities")->required();
    sc_sweep->add_option("--trials", trials)->required();
    sc_sweep->add_option("--seed", seed);
    sc_sweep->add_option("--parallel", parallel);
    sc_sweep->add_option("--out", output);

    auto* sc_core = app.add_subcommand("core-stats", "2-core sizes vs asymptotic predictions");
    sc_core->add_option("--K", K)->required();
    sc_core->add_option("--n", n)->required();
    sc_core->add_option("--c", c)->required();
    sc_core->add_option("--trials", trials)->required();
    sc_core->add_option("--seed", seed);
    sc_core->add_option("--out", output);

    app.add_subcommand("checks", "exact enumeration identity suite");

    auto* sc_cert = app.add_subcommand("certify", "interval-arithmetic grid certification");
    sc_cert->add_option("--region", region, "lk4|lk5|lk6|2a|2b|3|kgeq7|beta|tail")->required();
    sc_cert->add_option("--K", K, "K for tail region");
    sc_cert->add_option("--c", c, "c for tail region");
    sc_cert->add_option("--threads", parallel);
    sc_cert->add_option("--json", json_path, "also write a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sc_const->parsed()) return cmd_constants(K, as_json);
        if (sc_solve->parsed()) return cmd_solve(input);
        if (sc_sample->parsed()) return cmd_sample(K, n, m, seed, output);
        if (sc_peel->parsed()) return cmd_peel(input);
        if (sc_bounds->parsed()) return cmd_bounds(K, c, curve, grid);
        if (sc_sweep->parsed()) return cmd_sweep(K, n, c_csv, trials, seed, parallel, output);
        if (sc_core->parsed()) return cmd_core_stats(K, n, c, trials, seed, output);
        if (app.get_subcommand("checks")->parsed()) return cmd_checks();
        if (sc_cert->parsed()) return cmd_certify(region, K, c, parallel, json_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
