#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "xorgame/bitmatrix.hpp"
#include "xorgame/instance.hpp"
#include "xorgame/rng.hpp"

namespace xorgame {

/// Result of 2-core peeling plus the asymptotic predictions (filled only by
/// the prediction helpers; NaN when not computed).
struct CoreReport {
    int core_m = 0;
    std::vector<int> core_n;      // per-block surviving column counts
    std::vector<int> kept_rows;   // ascending original row indices
    std::vector<int> kept_cols;   // ascending original column indices
    double predicted_m = std::numeric_limits<double>::quiet_NaN();
    double predicted_n_j = std::numeric_limits<double>::quiet_NaN();
    double predicted_ratio = std::numeric_limits<double>::quiet_NaN();
};

struct CoreResult {
    BitMatrix core;    // compacted core matrix (kept rows x kept cols)
    CoreReport report;

    /// Right-hand side restricted to surviving rows.
    BitVec reduce_rhs(const BitVec& s) const {
        BitVec out(static_cast<int>(report.kept_rows.size()));
        for (std::size_t i = 0; i < report.kept_rows.size(); ++i)
            if (s.get(report.kept_rows[i])) out.set(static_cast<int>(i), true);
        return out;
    }
};

/// 2-core by worklist peeling: repeatedly delete degree-0 columns, and
/// degree-1 columns together with their unique containing row. The result is
/// independent of deletion order; pass an Rng to randomize the schedule (for
/// order-independence tests). Works for any boolean matrix.
CoreResult two_core(const BitMatrix& gamma, const BlockShape& shape, Rng* schedule_rng = nullptr);

/// Shape-free variant (single block spanning all columns).
CoreResult two_core(const BitMatrix& gamma, Rng* schedule_rng = nullptr);

/// Peeling on sparse row adjacency (column indices per row); returns only
/// the surviving index sets. This is the scalable path for size statistics
/// at large n, where materializing the dense matrix is wasteful.
struct PeelSets {
    std::vector<int> kept_rows;
    std::vector<int> kept_cols;
};
PeelSets two_core_sets(const std::vector<std::vector<int>>& row_cols, int ncols,
                       Rng* schedule_rng = nullptr);

/// Test helper: does solve-consistency of the original system equal that of
/// its peeled core? Must always hold.
bool satisfiability_preserved(const GameInstance& inst);

struct CorePrediction {
    double m_hat = 0;      // predicted surviving rows
    double n_j_hat = 0;    // predicted surviving columns per block
    double ratio = 0;      // predicted m_hat / n_j_hat = Q(mu)
};

/// Asymptotic core-size prediction at density c = m/n for K blocks of n
/// columns. Requires c > tilde_c(K) (below it the core is empty a.a.s.).
CorePrediction predicted_core(int K, int n, double c);

/// Exhaustive census over the full game space: group every graph's 2-core by
/// size class (core_m, per-block core sizes), and within each class count
/// occurrences of each labeled core (kept_rows, kept_cols, bits).
struct CensusClass {
    std::map<std::vector<std::uint64_t>, std::uint64_t> core_counts;
};
using CensusKey = std::pair<int, std::vector<int>>;
std::map<CensusKey, CensusClass> uniformity_census(int m, const BlockShape& shape);

/// True when every class of the census has all core multiplicities equal.
bool census_multiplicities_equal(const std::map<CensusKey, CensusClass>& census);

}  // namespace xorgame
