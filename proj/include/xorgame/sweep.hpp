#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xorgame/instance.hpp"
#include "xorgame/peeling.hpp"

namespace xorgame {

struct TrialRecord {
    int trial_index = 0;
    std::uint64_t seed = 0;
    int K = 0, n = 0, m = 0;
    double c = 0;
    int core_m = 0;
    std::vector<int> core_n;
    bool satisfiable = false;
    long wall_time_ms = 0;
};

struct SweepPoint {
    double c = 0;
    int m = 0;
    int trials = 0;
    int sat_count = 0;
    double p_hat = 0;
    double std_err = 0;
};

struct SweepSummary {
    int K = 0, n = 0;
    std::uint64_t master_seed = 0;
    double c_star_ref = 0;
    std::vector<SweepPoint> points;
};

/// Monte Carlo satisfiability sweep. m = round-to-nearest-even of c*n per
/// point; trial t of point p uses sub_seed(master_seed, p*trials + t), so
/// results are independent of the parallelism level.
SweepSummary run_sweep(int K, int n, const std::vector<double>& c_list, int trials,
                       std::uint64_t master_seed, int parallelism = 1,
                       bool cross_check_full_solve = false);

/// Frozen CSV: K,n,c,m,trials,sat_count,p_hat,std_err,c_star
std::string sweep_to_csv(const SweepSummary& s);

struct CoreStatRow {
    int trial = 0;
    int core_m = 0;
    std::vector<int> core_n;
};

struct CoreStats {
    int K = 0, n = 0, m = 0;
    double c = 0;
    std::uint64_t master_seed = 0;
    bool predicted_empty = false;  // c <= tilde_c(K): core empty a.a.s.
    double pred_m = 0, pred_nj = 0, pred_ratio = 0;
    std::vector<CoreStatRow> rows;
};

/// Per-trial 2-core sizes versus the asymptotic predictions.
CoreStats run_core_stats(int K, int n, double c, int trials, std::uint64_t master_seed,
                         int parallelism = 1);

/// Frozen CSV: K,n,c,trial,core_m,core_n1,...,core_nK,pred_m,pred_nj,pred_ratio
std::string core_stats_to_csv(const CoreStats& s);

/// Exact enumeration identities at fixed small shapes (rational arithmetic):
/// the second-moment identity on the game spaces (m = 3, 4) and the 2-core
/// space (m = 4), the product identity for E[Z], and the census
/// equal-multiplicity property.
struct EnumerationChecks {
    bool second_moment_xi_m3 = false;
    bool second_moment_xi_m4 = false;
    bool second_moment_psi_m4 = false;
    bool product_identity_m4 = false;
    bool block_space_m3_empty = false;  // pigeonhole: m >= 2 n_j fails at m=3
    bool census_m3 = false;
    bool census_m4 = false;

    bool all_pass() const {
        return second_moment_xi_m3 && second_moment_xi_m4 && second_moment_psi_m4 &&
               product_identity_m4 && block_space_m3_empty && census_m3 && census_m4;
    }
};

EnumerationChecks run_enumeration_checks();
std::string enumeration_checks_to_text(const EnumerationChecks& c);

/// Exact second-moment identity E[N^2]/E[N]^2 = E[X] + 1 over an enumerated
/// matrix family with s uniform; both sides computed independently.
struct SecondMomentCheck {
    Rational lhs;  // E[N^2]/E[N]^2 by full enumeration of matrices and s
    Rational rhs;  // E[X] + 1 by critical-set counting
    bool equal = false;
};
SecondMomentCheck second_moment_over_games(int m, const BlockShape& shape);
SecondMomentCheck second_moment_over_cores(int m, const BlockShape& shape);

struct StirlingScan {
    double sup_ratio = 0;
    int arg_m = 0;
    int arg_ell = 0;
};

/// sup over 1 <= ell <= m <= m_max of binom(m,ell)^{-1} / (sqrt(ell)
/// e^{-m H(ell/m)}), via log-gamma. Requires m_max <= 2000.
StirlingScan stirling_bound_scan(int m_max);

/// Wilson score interval for a binomial proportion.
struct WilsonInterval {
    double lo = 0, hi = 0;
};
WilsonInterval wilson_interval(int successes, int trials, double z = 2.5758293035489004);

}  // namespace xorgame
