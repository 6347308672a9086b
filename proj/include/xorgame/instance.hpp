#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "xorgame/bitmatrix.hpp"
#include "xorgame/rational.hpp"
#include "xorgame/rng.hpp"

namespace xorgame {

/// Block structure of a K-XORGAME system: K blocks with n_j columns each.
struct BlockShape {
    int K = 0;
    std::vector<int> n;

    static BlockShape uniform(int K, int n_per_block) {
        return BlockShape{K, std::vector<int>(static_cast<std::size_t>(K), n_per_block)};
    }

    int total_cols() const {
        int t = 0;
        for (int v : n) t += v;
        return t;
    }
    int block_offset(int j) const {
        int off = 0;
        for (int b = 0; b < j; ++b) off += n[static_cast<std::size_t>(b)];
        return off;
    }
    /// Block index owning column c.
    int block_of_col(int c) const {
        int j = 0;
        for (int off = 0; j < K; ++j) {
            off += n[static_cast<std::size_t>(j)];
            if (c < off) break;
        }
        return j;
    }
    bool uniformly_tiled() const {
        for (int v : n)
            if (v != n[0]) return false;
        return true;
    }
};

/// A K-XORGAME system: matrix with one 1 per row in each block, plus the
/// right-hand side and the seed it was drawn from.
struct GameInstance {
    BlockShape shape;
    BitMatrix gamma;
    BitVec s;
    std::uint64_t seed = 0;
};

/// Uniform sample from the K-XORGAME space times Z_2^m: each row picks one
/// uniform column per block; s is uniform. Requires m >= 1 and all n_j >= 1.
GameInstance sample_game(int m, const BlockShape& shape, Rng& rng);

/// Row adjacency only (one ascending column index per block, per row); the
/// scalable path when just the hypergraph structure matters. Draws the same
/// column choices as sample_game.
std::vector<std::vector<int>> sample_game_rows(int m, const BlockShape& shape, Rng& rng);

/// Uniform k-XORSAT matrix: each row a uniform k-subset of n columns.
/// Requires n >= k >= 1.
BitMatrix sample_xorsat(int m, int n, int k, Rng& rng);

/// Uniform sample from the 2-core K-XORGAME space, by rejection from the
/// full space on the column-degree condition. Slow near m = 2 max(n_j)
/// where acceptance is rare; intended for small test sizes. Requires a
/// feasible shape (m >= 2 n_j for all j).
GameInstance sample_core_game(int m, const BlockShape& shape, Rng& rng);

/// Single-consumer enumerator over all K-XORGAME matrices of a given size
/// (the space has (prod n_j)^m elements; budget 1e7).
class GameSpaceEnumerator {
  public:
    GameSpaceEnumerator(int m, BlockShape shape);

    /// Advances to the next matrix; false when exhausted.
    bool next(BitMatrix& out);

    std::uint64_t total_count() const { return total_; }

  private:
    int m_;
    BlockShape shape_;
    std::uint64_t total_ = 0;
    std::uint64_t index_ = 0;
    std::vector<int> choice_;  // per (row, block): chosen column within block
};

/// All matrices in the K-XORGAME space; calls fn once per matrix.
void for_each_game(int m, const BlockShape& shape, const std::function<void(const BitMatrix&)>& fn);

/// All 2-core K-XORGAME matrices (every column degree >= 2). Infeasible
/// shapes (m < 2 max n_j) yield nothing; check feasible() to distinguish.
class CoreSpaceEnumerator {
  public:
    CoreSpaceEnumerator(int m, BlockShape shape);
    bool next(BitMatrix& out);
    bool feasible() const { return feasible_; }

  private:
    GameSpaceEnumerator inner_;
    bool feasible_;
};

/// All m x n matrices with exactly one 1 per row and all column degrees >= 2
/// (the k=1 block space). Budget n^m <= 1e7; requires m >= 2n for non-emptiness.
class BlockSpaceEnumerator {
  public:
    BlockSpaceEnumerator(int m, int n);
    bool next(BitMatrix& out);

  private:
    CoreSpaceEnumerator inner_;
};

/// Exact E[Y^(ell)]: mean count of cardinality-ell critical row sets over the
/// uniform block space. Throws if the space is empty or over budget.
Rational exact_EY(int m, int n, int ell);

/// Exact E[Z^(ell)] over the uniform 2-core K-XORGAME space.
Rational exact_EZ(int m, const BlockShape& shape, int ell);

}  // namespace xorgame
