// Acceptance suite: every release criterion with its stated tolerance and
// runtime budget, one PASS/FAIL line each. Exit code 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "xorgame/bounds.hpp"
#include "xorgame/certify.hpp"
#include "xorgame/constants.hpp"
#include "xorgame/gf2.hpp"
#include "xorgame/instance.hpp"
#include "xorgame/peeling.hpp"
#include "xorgame/sweep.hpp"

using namespace xorgame;

namespace {

int g_failures = 0;

double run_timed(const std::function<bool(std::string&)>& body, bool& ok, std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    ok = body(detail);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void criterion(int num, const char* name, double budget_s,
               const std::function<bool(std::string&)>& body) {
    bool ok = false;
    std::string detail;
    const double secs = run_timed(body, ok, detail);
    const bool in_budget = secs < budget_s;
    const bool pass = ok && in_budget;
    if (!pass) ++g_failures;
    std::printf("%s criterion %d: %s (%.1fs of %.0fs budget)%s%s\n", pass ? "PASS" : "FAIL", num,
                name, secs, budget_s, detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
}

bool close_rel(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

BitMatrix random_matrix(int rows, int cols, Rng& rng, double density) {
    BitMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (rng.uniform01() < density) m.set(i, j, true);
    return m;
}

BitVec mat_vec(const BitMatrix& m, const BitVec& x) {
    BitVec out(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        int parity = 0;
        for (int j = 0; j < m.cols(); ++j)
            if (m.get(i, j) && x.get(j)) parity ^= 1;
        out.set(i, parity);
    }
    return out;
}

// ---- criterion bodies ----------------------------------------------------

bool table_reproduction(std::string& detail) {
    const double want[] = {2.75381, 3.90708, 4.96219, 5.98428, 6.99345, 7.99728, 8.99888};
    const double want_ratio[] = {0.917935, 0.97677, 0.992438, 0.99738, 0.999064, 0.99966, 0.999876};
    double worst = 0;
    for (int K = 3; K <= 9; ++K) {
        const double cs = c_star(K);
        worst = std::max(worst, std::fabs(cs - want[K - 3]));
        worst = std::max(worst, std::fabs(cs / K - want_ratio[K - 3]));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max abs deviation %.2e", worst);
    detail = buf;
    return worst < 1e-4;
}

bool certification_suite(std::string& detail) {
    std::vector<CertificationReport> reps;
    reps.push_back(certify_lk_grid(4));
    reps.push_back(certify_lk_grid(5));
    reps.push_back(certify_lk_grid(6));
    reps.push_back(certify_region_2a());
    reps.push_back(certify_region_2b());
    reps.push_back(certify_region_3());
    reps.push_back(certify_k_geq_7());
    reps.push_back(certify_beta_bounds());
    bool all = true;
    std::string failed;
    for (const auto& r : reps) {
        if (!r.pass) {
            all = false;
            failed += (failed.empty() ? "" : ",") + r.region_id;
        }
    }
    detail = all ? "all regions certified at the reference grids"
                 : "failed regions: " + failed;
    return all;
}

bool exact_identities(std::string& detail) {
    const BlockShape shape = BlockShape::uniform(3, 2);
    // (a) second-moment identity, exact rationals
    const SecondMomentCheck xi3 = second_moment_over_games(3, shape);
    const SecondMomentCheck xi4 = second_moment_over_games(4, shape);
    const SecondMomentCheck psi4 = second_moment_over_cores(4, shape);
    if (!(xi3.equal && xi4.equal && psi4.equal)) {
        detail = "second-moment identity violated";
        return false;
    }
    // (b) product identity for every l at m = 4; the m = 3 block/2-core
    // spaces are empty by the pigeonhole bound, which we verify
    auto binom = [](int m, int l) {
        long long r = 1;
        for (int i = 1; i <= l; ++i) r = r * (m - l + i) / i;
        return r;
    };
    for (int ell = 1; ell <= 4; ++ell) {
        const Rational lhs = exact_EZ(4, shape, ell);
        Rational rhs(1);
        for (int v : shape.n) rhs = rhs * exact_EY(4, v, ell);
        for (int i = 1; i < shape.K; ++i) rhs = rhs / Rational(binom(4, ell));
        if (lhs != rhs) {
            detail = "product identity violated at l=" + std::to_string(ell);
            return false;
        }
    }
    {
        BlockSpaceEnumerator be(3, 2);
        CoreSpaceEnumerator ce(3, shape);
        BitMatrix g;
        if (be.next(g) || ce.next(g)) {
            detail = "m=3 2-core spaces unexpectedly non-empty";
            return false;
        }
    }
    // (c) census equal multiplicity over all 512 resp. 4096 graphs
    const auto c3 = uniformity_census(3, shape);
    const auto c4 = uniformity_census(4, shape);
    std::uint64_t tot3 = 0, tot4 = 0;
    for (const auto& [k, grp] : c3)
        for (const auto& [core, n] : grp.core_counts) tot3 += n;
    for (const auto& [k, grp] : c4)
        for (const auto& [core, n] : grp.core_counts) tot4 += n;
    if (tot3 != 512 || tot4 != 4096) {
        detail = "census totals wrong";
        return false;
    }
    if (!census_multiplicities_equal(c3) || !census_multiplicities_equal(c4)) {
        detail = "census multiplicities unequal";
        return false;
    }
    detail = "E[N^2]/E[N]^2 = E[X]+1 (=" + psi4.rhs.to_string() + " on the 2-core space), product and census exact";
    return true;
}

bool structural_gf2(std::string& detail) {
    Rng rng(1001);
    // critical-set identity on 1000 random matrices
    for (int t = 0; t < 1000; ++t) {
        const int rows = 1 + static_cast<int>(rng.below(12));
        const int cols = 1 + static_cast<int>(rng.below(14));
        const BitMatrix m = random_matrix(rows, cols, rng, 0.1 + 0.8 * rng.uniform01());
        const std::uint64_t expect = (std::uint64_t{1} << (rows - rank(m))) - 1;
        if (critical_sets_bruteforce(m) != expect) {
            detail = "critical-set identity violated";
            return false;
        }
    }
    // solve witnesses verify
    for (int t = 0; t < 500; ++t) {
        const int rows = 1 + static_cast<int>(rng.below(12));
        const int cols = 1 + static_cast<int>(rng.below(10));
        const BitMatrix m = random_matrix(rows, cols, rng, 0.5);
        BitVec planted(cols);
        for (int j = 0; j < cols; ++j) planted.set(j, rng.coin());
        const BitVec s = mat_vec(m, planted);
        const auto x = solve(m, s);
        if (!x || !(mat_vec(m, *x) == s)) {
            detail = "solve witness failed verification";
            return false;
        }
    }
    // satisfiability preserved + order independence on 500 random instances
    const BlockShape shape = BlockShape::uniform(3, 10);
    for (int t = 0; t < 500; ++t) {
        const int m = 5 + static_cast<int>(rng.below(36));
        const GameInstance g = sample_game(m, shape, rng);
        if (!satisfiability_preserved(g)) {
            detail = "peeling changed satisfiability";
            return false;
        }
        const CoreResult ref = two_core(g.gamma, shape);
        for (int sched = 0; sched < 50; ++sched) {
            Rng srng(sub_seed(2002, static_cast<std::uint64_t>(t) * 64 + sched));
            const CoreResult got = two_core(g.gamma, shape, &srng);
            if (got.report.kept_rows != ref.report.kept_rows ||
                got.report.kept_cols != ref.report.kept_cols) {
                detail = "peeling depended on deletion order";
                return false;
            }
        }
    }
    detail = "1000 critical-set identities, 500 witnesses, 500x50 peeling schedules";
    return true;
}

bool core_size_law(std::string& detail) {
    const int n = 30000;
    const CorePrediction pred = predicted_core(3, n, 2.6);
    const CoreStats stats = run_core_stats(3, n, 2.6, 20, 3003, 4);
    double sum_ratio = 0;
    for (const CoreStatRow& r : stats.rows) {
        const double nj_mean =
            (r.core_n[0] + r.core_n[1] + r.core_n[2]) / 3.0;
        sum_ratio += r.core_m / nj_mean;
        const int mx = std::max({r.core_n[0], r.core_n[1], r.core_n[2]});
        const int mn = std::min({r.core_n[0], r.core_n[1], r.core_n[2]});
        if ((mx - mn) > 0.05 * nj_mean) {
            detail = "per-block core sizes differ by more than 5%";
            return false;
        }
    }
    const double mean_ratio = sum_ratio / 20.0;
    if (std::fabs(mean_ratio - pred.ratio) > 0.02 * pred.ratio) {
        detail = "mean core ratio off by more than 2%";
        return false;
    }
    const CoreStats empty = run_core_stats(3, n, 1.5, 20, 3004, 4);
    int empties = 0;
    for (const CoreStatRow& r : empty.rows)
        if (r.core_m == 0) ++empties;
    if (empties < 19) {
        detail = "fewer than 19/20 empty cores at c=1.5";
        return false;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "mean ratio %.4f vs Q(mu)=%.4f; %d/20 empty at c=1.5",
                  mean_ratio, pred.ratio, empties);
    detail = buf;
    return true;
}

bool threshold_crossover(std::string& detail) {
    const std::vector<double> cs = {2.4, 2.55, 2.7, 2.8, 2.95, 3.1};
    const SweepSummary s = run_sweep(3, 500, cs, 400, 4004, 4);
    const auto& pts = s.points;
    if (pts.front().p_hat < 0.9) {
        detail = "p_hat(2.4) < 0.9";
        return false;
    }
    if (pts.back().p_hat > 0.1) {
        detail = "p_hat(3.1) > 0.1";
        return false;
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double se =
            std::sqrt(pts[i].std_err * pts[i].std_err + pts[i + 1].std_err * pts[i + 1].std_err);
        if (pts[i + 1].p_hat > pts[i].p_hat + 3 * se) {
            detail = "p_hat increased beyond 3 standard errors";
            return false;
        }
    }
    double crossing = -1;
    for (const SweepPoint& p : pts)
        if (p.p_hat < 0.5) {
            crossing = p.c;
            break;
        }
    const double cs3 = c_star(3);
    if (!(crossing >= cs3 - 0.15 && crossing <= cs3 + 0.15)) {
        detail = "p_hat=1/2 crossing outside c*_3 +/- 0.15";
        return false;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "p(2.4)=%.3f p(3.1)=%.3f crossing at c=%.2f (c*=%.4f)",
                  pts.front().p_hat, pts.back().p_hat, crossing, cs3);
    detail = buf;
    return true;
}

bool function_identities(std::string& detail) {
    Rng rng(5005);
    for (int t = 0; t < 10000; ++t) {
        const double alpha = 0.01 + 0.98 * rng.uniform01();
        const Zeta z{0.05 + rng.uniform01(), 0.05 + rng.uniform01()};
        const int K = 3 + static_cast<int>(rng.below(6));
        const double c = 2.05 + 6.0 * rng.uniform01();
        const double lhs = j_K(alpha, z, Density::from_c(c), K);
        const double rhs = (1.0 - K) / K * entropy(alpha) + h_k_three(alpha, z, c, 1) / c;
        if (!close_rel(lhs, rhs, 1e-12)) {
            detail = "J_K vs H_1 decomposition identity failed";
            return false;
        }
        const double lambda = 0.05 + 5.0 * rng.uniform01();
        if (!close_rel(h_k_two(alpha, lambda, K), l_K_lambda(alpha, lambda, K), 1e-12)) {
            detail = "H_k(alpha;lambda) = L_K(alpha,Q(lambda)) identity failed";
            return false;
        }
    }
    for (int i = 1; i <= 43; ++i) {
        const double lambda = 0.05 * i;
        if (std::fabs(j_sqrt3(0.5, lambda) -
                      (1.0 / 3 - 1.0 / q_of(lambda)) * std::log(2.0)) > 1e-10) {
            detail = "alpha=1/2 closed form failed";
            return false;
        }
    }
    const double h = 1e-5;
    for (double lambda : {0.3, 1.0, 2.0}) {
        for (int i = 1; i <= 17; ++i) {
            const double alpha = 0.05 + 0.05 * i;
            auto f = [lambda](double a) { return j_sqrt3(a, lambda); };
            auto f1 = [lambda](double a) { return dj_sqrt3_dalpha(a, lambda); };
            if (!close_rel(dj_sqrt3_dalpha(alpha, lambda), oracle::fd1(f, alpha, h), 1e-5) ||
                !close_rel(d2j_sqrt3_dalpha2(alpha, lambda), oracle::fd1(f1, alpha, h), 1e-5)) {
                detail = "derivative vs finite differences failed";
                return false;
            }
        }
    }
    for (int t = 0; t < 3000; ++t) {
        const int K = 3 + static_cast<int>(rng.below(5));
        const double c = 2.0 + (K - 2.0) * (0.02 + 0.96 * rng.uniform01());
        const double a0 = beta_K(K) * (1e-3 + (1 - 2e-3) * rng.uniform01());
        if (!near_zero_bound_holds(a0, c, K)) {
            detail = "near-zero bound violated";
            return false;
        }
        const double a1 = 0.5 + 0.49 * rng.uniform01();
        if (!reflection_holds(a1, c, K)) {
            detail = "reflection inequality violated";
            return false;
        }
    }
    detail = "1e4 tuples per identity, closed forms, derivatives, inequalities";
    return true;
}

bool determinism(std::string& detail) {
    const std::vector<double> cs = {2.4, 2.9};
    const std::string s1 = sweep_to_csv(run_sweep(3, 120, cs, 60, 6006, 1));
    const std::string s4 = sweep_to_csv(run_sweep(3, 120, cs, 60, 6006, 4));
    const std::string s16 = sweep_to_csv(run_sweep(3, 120, cs, 60, 6006, 16));
    const std::string s4b = sweep_to_csv(run_sweep(3, 120, cs, 60, 6006, 4));
    if (!(s1 == s4 && s1 == s16 && s4 == s4b)) {
        detail = "sweep CSV differs across parallelism or runs";
        return false;
    }
    const std::string c1 = certify_lk_grid(4, 25, -1e-4, 1).canonical_text();
    const std::string c4 = certify_lk_grid(4, 25, -1e-4, 4).canonical_text();
    const std::string r1 = certify_region_3(40, 40, 1).canonical_text();
    const std::string r4 = certify_region_3(40, 40, 4).canonical_text();
    const std::string r4b = certify_region_3(40, 40, 4).canonical_text();
    if (!(c1 == c4 && r1 == r4 && r4 == r4b)) {
        detail = "certification reports differ across thread counts";
        return false;
    }
    detail = "sweep CSV and certification reports byte-identical";
    return true;
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion(1, "threshold table reproduction to 1e-4", 1.0, table_reproduction);
    criterion(2, "interval certification suite at the reference grids", 300.0, certification_suite);
    criterion(3, "exact enumeration identities (rational arithmetic)", 60.0, exact_identities);
    criterion(4, "structural GF(2) and peeling properties", 60.0, structural_gf2);
    criterion(5, "2-core size law at n=30000", 60.0, core_size_law);
    criterion(6, "satisfiability threshold crossover at n=500", 600.0, threshold_crossover);
    criterion(7, "bound-function identity suite", 30.0, function_identities);
    criterion(8, "determinism across parallelism and runs", 120.0, determinism);
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
