#include "xorgame/sweep.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "xorgame/constants.hpp"
#include "xorgame/gf2.hpp"

namespace xorgame {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

int round_nearest_even(double x) {
    // std::nearbyint honors the current rounding mode; the default
    // FE_TONEAREST is round-half-to-even.
    return static_cast<int>(std::nearbyint(x));
}

template <typename Fn>
void parallel_for(int total, int parallelism, Fn fn) {
    parallelism = std::max(1, parallelism);
    if (parallelism == 1) {
        for (int i = 0; i < total; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(parallelism));
    const int chunk = (total + parallelism - 1) / parallelism;
    for (int t = 0; t < parallelism; ++t) {
        const int from = t * chunk;
        const int to = std::min(total, from + chunk);
        if (from < to)
            pool.emplace_back([from, to, t, &fn, &errors] {
                try {
                    for (int i = from; i < to; ++i) fn(i);
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace

SweepSummary run_sweep(int K, int n, const std::vector<double>& c_list, int trials,
                       std::uint64_t master_seed, int parallelism, bool cross_check_full_solve) {
    if (n < 1 || trials < 1) throw std::invalid_argument("run_sweep: n >= 1 and trials >= 1 required");
    for (double c : c_list)
        if (!(c > 0)) throw std::invalid_argument("run_sweep: densities must be positive");

    SweepSummary out;
    out.K = K;
    out.n = n;
    out.master_seed = master_seed;
    out.c_star_ref = c_star(K);
    const BlockShape shape = BlockShape::uniform(K, n);

    for (std::size_t p = 0; p < c_list.size(); ++p) {
        const double c = c_list[p];
        const int m = round_nearest_even(c * n);
        std::vector<char> sat(static_cast<std::size_t>(trials), 0);
        parallel_for(trials, parallelism, [&](int t) {
            const std::uint64_t seed =
                sub_seed(master_seed, static_cast<std::uint64_t>(p) * trials + static_cast<std::uint64_t>(t));
            Rng rng(seed);
            const GameInstance inst = sample_game(m, shape, rng);
            const CoreResult core = two_core(inst.gamma, shape);
            const bool ok = is_consistent(core.core, core.reduce_rhs(inst.s));
            if (cross_check_full_solve && ok != is_consistent(inst.gamma, inst.s))
                throw std::logic_error("run_sweep: core consistency disagrees with full solve");
            sat[static_cast<std::size_t>(t)] = ok ? 1 : 0;
        });
        SweepPoint pt;
        pt.c = c;
        pt.m = m;
        pt.trials = trials;
        for (char b : sat) pt.sat_count += b;
        pt.p_hat = static_cast<double>(pt.sat_count) / trials;
        pt.std_err = std::sqrt(pt.p_hat * (1.0 - pt.p_hat) / trials);
        out.points.push_back(pt);
    }
    return out;
}

std::string sweep_to_csv(const SweepSummary& s) {
    std::string csv = "K,n,c,m,trials,sat_count,p_hat,std_err,c_star\n";
    for (const SweepPoint& p : s.points) {
        csv += std::to_string(s.K) + "," + std::to_string(s.n) + "," + fmt("%.6g", p.c) + "," +
               std::to_string(p.m) + "," + std::to_string(p.trials) + "," +
               std::to_string(p.sat_count) + "," + fmt("%.6f", p.p_hat) + "," +
               fmt("%.6f", p.std_err) + "," + fmt("%.6f", s.c_star_ref) + "\n";
    }
    return csv;
}

CoreStats run_core_stats(int K, int n, double c, int trials, std::uint64_t master_seed,
                         int parallelism) {
    if (!(c > 0)) throw std::invalid_argument("run_core_stats: c must be positive");
    CoreStats out;
    out.K = K;
    out.n = n;
    out.c = c;
    out.m = round_nearest_even(c * n);
    out.master_seed = master_seed;
    if (c > tilde_c(K)) {
        const CorePrediction p = predicted_core(K, n, c);
        out.pred_m = p.m_hat;
        out.pred_nj = p.n_j_hat;
        out.pred_ratio = p.ratio;
    } else {
        out.predicted_empty = true;
    }
    const BlockShape shape = BlockShape::uniform(K, n);
    out.rows.assign(static_cast<std::size_t>(trials), CoreStatRow{});
    parallel_for(trials, parallelism, [&](int t) {
        Rng rng(sub_seed(master_seed, static_cast<std::uint64_t>(t)));
        const auto adjacency = sample_game_rows(out.m, shape, rng);
        const PeelSets sets = two_core_sets(adjacency, shape.total_cols());
        CoreStatRow& row = out.rows[static_cast<std::size_t>(t)];
        row.trial = t;
        row.core_m = static_cast<int>(sets.kept_rows.size());
        row.core_n.assign(static_cast<std::size_t>(K), 0);
        for (int c : sets.kept_cols) row.core_n[static_cast<std::size_t>(shape.block_of_col(c))]++;
    });
    return out;
}

std::string core_stats_to_csv(const CoreStats& s) {
    std::string csv = "K,n,c,trial,core_m";
    for (int j = 1; j <= s.K; ++j) csv += ",core_n" + std::to_string(j);
    csv += ",pred_m,pred_nj,pred_ratio\n";
    for (const CoreStatRow& r : s.rows) {
        csv += std::to_string(s.K) + "," + std::to_string(s.n) + "," + fmt("%.6g", s.c) + "," +
               std::to_string(r.trial) + "," + std::to_string(r.core_m);
        for (int v : r.core_n) csv += "," + std::to_string(v);
        csv += "," + fmt("%.3f", s.pred_m) + "," + fmt("%.3f", s.pred_nj) + "," +
               fmt("%.6f", s.pred_ratio) + "\n";
    }
    return csv;
}

// ---- exact enumeration checks -------------------------------------------
//
// E[N^2]/E[N]^2 with N the number of solutions of Gx = s, s uniform, is
// computed by brute enumeration of all (G, s, x) triples; E[X] + 1 comes
// from critical-set counts on each G alone. The two sides are independent.

SecondMomentCheck second_moment_over_games(int m, const BlockShape& shape) {
    const int cols = shape.total_cols();
    if (cols > 20 || m > 20) throw std::invalid_argument("second moment: enumeration too large");
    Rational sum_n(0), sum_n2(0), sum_x(0);
    long long count = 0;
    for_each_game(m, shape, [&](const BitMatrix& g) {
        ++count;
        for (std::uint64_t sbits = 0; sbits < (std::uint64_t{1} << m); ++sbits) {
            long long nsol = 0;
            for (std::uint64_t xbits = 0; xbits < (std::uint64_t{1} << cols); ++xbits) {
                bool match = true;
                for (int i = 0; i < m && match; ++i) {
                    int parity = 0;
                    const std::uint64_t row = g.words()[static_cast<std::size_t>(i) * g.words_per_row()];
                    parity = std::popcount(row & xbits) & 1;
                    if (parity != static_cast<int>((sbits >> i) & 1)) match = false;
                }
                if (match) ++nsol;
            }
            sum_n += Rational(nsol);
            sum_n2 += Rational(nsol) * Rational(nsol);
        }
        sum_x += Rational(static_cast<long long>(critical_sets_bruteforce(g)));
    });
    const Rational pairs = Rational(count) * Rational::pow2(m);
    const Rational en = sum_n / pairs;
    const Rational en2 = sum_n2 / pairs;
    SecondMomentCheck chk;
    chk.lhs = en2 / (en * en);
    chk.rhs = sum_x / Rational(count) + Rational(1);
    chk.equal = chk.lhs == chk.rhs;
    return chk;
}

SecondMomentCheck second_moment_over_cores(int m, const BlockShape& shape) {
    const int cols = shape.total_cols();
    if (cols > 20 || m > 20) throw std::invalid_argument("second moment: enumeration too large");
    Rational sum_n(0), sum_n2(0), sum_x(0);
    long long count = 0;
    CoreSpaceEnumerator e(m, shape);
    BitMatrix g;
    while (e.next(g)) {
        ++count;
        for (std::uint64_t sbits = 0; sbits < (std::uint64_t{1} << m); ++sbits) {
            long long nsol = 0;
            for (std::uint64_t xbits = 0; xbits < (std::uint64_t{1} << cols); ++xbits) {
                bool match = true;
                for (int i = 0; i < m && match; ++i) {
                    const std::uint64_t row = g.words()[static_cast<std::size_t>(i) * g.words_per_row()];
                    if ((std::popcount(row & xbits) & 1) != static_cast<int>((sbits >> i) & 1)) match = false;
                }
                if (match) ++nsol;
            }
            sum_n += Rational(nsol);
            sum_n2 += Rational(nsol) * Rational(nsol);
        }
        sum_x += Rational(static_cast<long long>(critical_sets_bruteforce(g)));
    }
    if (count == 0) throw std::domain_error("second moment: empty 2-core space");
    const Rational pairs = Rational(count) * Rational::pow2(m);
    const Rational en = sum_n / pairs;
    const Rational en2 = sum_n2 / pairs;
    SecondMomentCheck chk;
    chk.lhs = en2 / (en * en);
    chk.rhs = sum_x / Rational(count) + Rational(1);
    chk.equal = chk.lhs == chk.rhs;
    return chk;
}

namespace {

long long binom_ll(int m, int l) {
    long long r = 1;
    for (int i = 1; i <= l; ++i) r = r * (m - l + i) / i;
    return r;
}

bool product_identity_holds(int m, const BlockShape& shape) {
    // E[Z^(l)] = binom(m,l)^{1-K} prod_j E[Y^(l)_{m,n_j,1}] for every l
    for (int ell = 1; ell <= m; ++ell) {
        const Rational lhs = exact_EZ(m, shape, ell);
        Rational rhs(1);
        for (int v : shape.n) rhs = rhs * exact_EY(m, v, ell);
        const long long b = binom_ll(m, ell);
        for (int i = 1; i < shape.K; ++i) rhs = rhs / Rational(b);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace

EnumerationChecks run_enumeration_checks() {
    EnumerationChecks out;
    const BlockShape shape = BlockShape::uniform(3, 2);

    out.second_moment_xi_m3 = second_moment_over_games(3, shape).equal;
    out.second_moment_xi_m4 = second_moment_over_games(4, shape).equal;
    out.second_moment_psi_m4 = second_moment_over_cores(4, shape).equal;

    out.product_identity_m4 = product_identity_holds(4, shape);

    // At m = 3 the block spaces A_{3,2,1} (and hence the 2-core game space)
    // are empty by the pigeonhole bound m >= 2 n_j.
    {
        BlockSpaceEnumerator be(3, 2);
        BitMatrix g;
        bool any = be.next(g);
        CoreSpaceEnumerator ce(3, shape);
        const bool any_core = ce.next(g);
        out.block_space_m3_empty = !any && !any_core;
    }

    out.census_m3 = census_multiplicities_equal(uniformity_census(3, shape));
    out.census_m4 = census_multiplicities_equal(uniformity_census(4, shape));
    return out;
}

std::string enumeration_checks_to_text(const EnumerationChecks& c) {
    auto line = [](const char* name, bool ok) {
        return std::string(ok ? "PASS" : "FAIL") + " " + name + "\n";
    };
    std::string s;
    s += line("second-moment identity, game space K=3 n=(2,2,2) m=3", c.second_moment_xi_m3);
    s += line("second-moment identity, game space K=3 n=(2,2,2) m=4", c.second_moment_xi_m4);
    s += line("second-moment identity, 2-core space K=3 n=(2,2,2) m=4", c.second_moment_psi_m4);
    s += line("product identity E[Z] = binom^(1-K) prod E[Y], m=4, all l", c.product_identity_m4);
    s += line("pigeonhole emptiness of 2-core spaces at m=3", c.block_space_m3_empty);
    s += line("uniformity census equal multiplicities, m=3 (512 graphs)", c.census_m3);
    s += line("uniformity census equal multiplicities, m=4 (4096 graphs)", c.census_m4);
    return s;
}

StirlingScan stirling_bound_scan(int m_max) {
    if (m_max < 1 || m_max > 2000) throw std::invalid_argument("stirling_bound_scan: m_max within [1,2000]");
    StirlingScan out;
    out.sup_ratio = 0;
    for (int m = 1; m <= m_max; ++m) {
        for (int l = 1; l <= m; ++l) {
            const double a = static_cast<double>(l) / m;
            const double log_binom = std::lgamma(m + 1.0) - std::lgamma(l + 1.0) - std::lgamma(m - l + 1.0);
            const double H = -(a == 0 ? 0 : a * std::log(a)) - (a == 1 ? 0 : (1 - a) * std::log(1 - a));
            const double log_ratio = -log_binom - 0.5 * std::log(static_cast<double>(l)) + m * H;
            const double ratio = std::exp(log_ratio);
            if (ratio > out.sup_ratio) {
                out.sup_ratio = ratio;
                out.arg_m = m;
                out.arg_ell = l;
            }
        }
    }
    return out;
}

WilsonInterval wilson_interval(int successes, int trials, double z) {
    const double n = trials;
    const double p = successes / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return WilsonInterval{std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace xorgame
