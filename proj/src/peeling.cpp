#include "xorgame/peeling.hpp"

#include <cmath>
#include <stdexcept>

#include "xorgame/constants.hpp"
#include "xorgame/gf2.hpp"

namespace xorgame {

PeelSets two_core_sets(const std::vector<std::vector<int>>& row_cols, int ncols, Rng* schedule_rng) {
    const int m = static_cast<int>(row_cols.size());
    std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(ncols));
    for (int i = 0; i < m; ++i)
        for (int c : row_cols[static_cast<std::size_t>(i)]) col_rows[static_cast<std::size_t>(c)].push_back(i);

    std::vector<int> degree(static_cast<std::size_t>(ncols));
    std::vector<char> row_alive(static_cast<std::size_t>(m), 1);
    std::vector<char> col_alive(static_cast<std::size_t>(ncols), 1);

    std::vector<int> worklist;
    for (int c = 0; c < ncols; ++c) {
        degree[static_cast<std::size_t>(c)] = static_cast<int>(col_rows[static_cast<std::size_t>(c)].size());
        if (degree[static_cast<std::size_t>(c)] <= 1) worklist.push_back(c);
    }

    auto pop = [&]() {
        std::size_t at = worklist.size() - 1;
        if (schedule_rng) at = static_cast<std::size_t>(schedule_rng->below(worklist.size()));
        const int c = worklist[at];
        worklist[at] = worklist.back();
        worklist.pop_back();
        return c;
    };

    while (!worklist.empty()) {
        const int c = pop();
        if (!col_alive[static_cast<std::size_t>(c)]) continue;
        if (degree[static_cast<std::size_t>(c)] > 1) continue;  // stale entry
        col_alive[static_cast<std::size_t>(c)] = 0;
        if (degree[static_cast<std::size_t>(c)] == 0) continue;
        // Degree 1: remove the unique alive containing row as well.
        int r = -1;
        for (int cand : col_rows[static_cast<std::size_t>(c)])
            if (row_alive[static_cast<std::size_t>(cand)]) {
                r = cand;
                break;
            }
        row_alive[static_cast<std::size_t>(r)] = 0;
        for (int c2 : row_cols[static_cast<std::size_t>(r)]) {
            if (!col_alive[static_cast<std::size_t>(c2)]) continue;
            if (--degree[static_cast<std::size_t>(c2)] <= 1) worklist.push_back(c2);
        }
    }

    PeelSets out;
    for (int i = 0; i < m; ++i)
        if (row_alive[static_cast<std::size_t>(i)]) out.kept_rows.push_back(i);
    for (int c = 0; c < ncols; ++c)
        if (col_alive[static_cast<std::size_t>(c)]) out.kept_cols.push_back(c);
    return out;
}

namespace {

CoreResult peel(const BitMatrix& gamma, const BlockShape* shape, Rng* schedule_rng) {
    const int m = gamma.rows();
    const int ncols = gamma.cols();
    std::vector<std::vector<int>> row_cols(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) row_cols[static_cast<std::size_t>(i)] = gamma.row_ones(i);
    PeelSets sets = two_core_sets(row_cols, ncols, schedule_rng);

    CoreResult res;
    res.report.kept_rows = std::move(sets.kept_rows);
    res.report.kept_cols = std::move(sets.kept_cols);
    res.report.core_m = static_cast<int>(res.report.kept_rows.size());
    if (shape) {
        res.report.core_n.assign(static_cast<std::size_t>(shape->K), 0);
        for (int c : res.report.kept_cols)
            res.report.core_n[static_cast<std::size_t>(shape->block_of_col(c))]++;
    } else {
        res.report.core_n = {static_cast<int>(res.report.kept_cols.size())};
    }
    res.core = gamma.submatrix(res.report.kept_rows, res.report.kept_cols);
    return res;
}

}  // namespace

CoreResult two_core(const BitMatrix& gamma, const BlockShape& shape, Rng* schedule_rng) {
    if (shape.total_cols() != gamma.cols())
        throw std::invalid_argument("two_core: shape does not match matrix");
    return peel(gamma, &shape, schedule_rng);
}

CoreResult two_core(const BitMatrix& gamma, Rng* schedule_rng) {
    return peel(gamma, nullptr, schedule_rng);
}

bool satisfiability_preserved(const GameInstance& inst) {
    const CoreResult cr = two_core(inst.gamma, inst.shape);
    const bool original = is_consistent(inst.gamma, inst.s);
    const bool core = is_consistent(cr.core, cr.reduce_rhs(inst.s));
    return original == core;
}

CorePrediction predicted_core(int K, int n, double c) {
    if (!(c > tilde_c(K)))
        throw std::domain_error("predicted_core: empty core a.a.s. for c <= tilde_c(K)");
    const double mu = mu_of_c(c, K);
    const double em = std::exp(-mu);
    CorePrediction p;
    p.n_j_hat = em * (std::exp(mu) - 1.0 - mu) * n;
    p.m_hat = mu * em * std::expm1(mu) * n;
    p.ratio = q_of(mu);
    return p;
}

namespace {

// Canonical labeled-core key: kept rows, kept cols and the core's packed bits.
std::vector<std::uint64_t> core_key(const CoreResult& cr) {
    std::vector<std::uint64_t> key;
    key.push_back(static_cast<std::uint64_t>(cr.report.kept_rows.size()));
    for (int r : cr.report.kept_rows) key.push_back(static_cast<std::uint64_t>(r));
    key.push_back(static_cast<std::uint64_t>(cr.report.kept_cols.size()));
    for (int c : cr.report.kept_cols) key.push_back(static_cast<std::uint64_t>(c));
    key.insert(key.end(), cr.core.words().begin(), cr.core.words().end());
    return key;
}

}  // namespace

std::map<CensusKey, CensusClass> uniformity_census(int m, const BlockShape& shape) {
    std::map<CensusKey, CensusClass> census;
    for_each_game(m, shape, [&](const BitMatrix& g) {
        const CoreResult cr = two_core(g, shape);
        const CensusKey key{cr.report.core_m, cr.report.core_n};
        census[key].core_counts[core_key(cr)]++;
    });
    return census;
}

bool census_multiplicities_equal(const std::map<CensusKey, CensusClass>& census) {
    for (const auto& [size_class, group] : census) {
        std::uint64_t mult = 0;
        for (const auto& [core, count] : group.core_counts) {
            if (mult == 0) mult = count;
            if (count != mult) return false;
        }
    }
    return true;
}

}  // namespace xorgame
