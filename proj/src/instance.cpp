#include "xorgame/instance.hpp"

#include <algorithm>
#include <stdexcept>

#include "xorgame/gf2.hpp"

namespace xorgame {

namespace {

constexpr std::uint64_t kSpaceBudget = 10'000'000;

std::uint64_t checked_space_size(int m, const BlockShape& shape) {
    if (m < 0) throw std::invalid_argument("enumerator: m must be non-negative");
    std::uint64_t prod = 1;
    for (int v : shape.n) {
        if (v < 1) throw std::invalid_argument("enumerator: empty block");
        if (m >= 1 && prod > kSpaceBudget / static_cast<std::uint64_t>(v))
            throw std::invalid_argument("enumerator: space exceeds 1e7 budget");
        prod *= static_cast<std::uint64_t>(v);
    }
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) {
        if (total > kSpaceBudget / prod)
            throw std::invalid_argument("enumerator: space exceeds 1e7 budget");
        total *= prod;
    }
    if (total > kSpaceBudget)
        throw std::invalid_argument("enumerator: space exceeds 1e7 budget");
    return total;
}

}  // namespace

std::vector<std::vector<int>> sample_game_rows(int m, const BlockShape& shape, Rng& rng) {
    if (m < 1) throw std::invalid_argument("sample_game: m >= 1 required");
    for (int v : shape.n)
        if (v < 1) throw std::invalid_argument("sample_game: empty block");
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(shape.K));
        int off = 0;
        for (int j = 0; j < shape.K; ++j) {
            const int nj = shape.n[static_cast<std::size_t>(j)];
            row.push_back(off + static_cast<int>(rng.below(static_cast<std::uint64_t>(nj))));
            off += nj;
        }
    }
    return rows;
}

GameInstance sample_game(int m, const BlockShape& shape, Rng& rng) {
    const std::vector<std::vector<int>> rows = sample_game_rows(m, shape, rng);
    GameInstance inst;
    inst.shape = shape;
    inst.gamma = BitMatrix(m, shape.total_cols());
    inst.s = BitVec(m);
    for (int i = 0; i < m; ++i) {
        for (int c : rows[static_cast<std::size_t>(i)]) inst.gamma.set(i, c, true);
        inst.s.set(i, rng.coin());
    }
    return inst;
}

BitMatrix sample_xorsat(int m, int n, int k, Rng& rng) {
    if (k < 1 || n < k) throw std::invalid_argument("sample_xorsat: requires n >= k >= 1");
    BitMatrix out(m, n);
    // Uniform k-subset per row by rejection on repeats; k << n in practice.
    std::vector<int> picked;
    for (int i = 0; i < m; ++i) {
        picked.clear();
        while (static_cast<int>(picked.size()) < k) {
            const int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (std::find(picked.begin(), picked.end(), c) == picked.end()) picked.push_back(c);
        }
        for (int c : picked) out.set(i, c, true);
    }
    return out;
}

GameInstance sample_core_game(int m, const BlockShape& shape, Rng& rng) {
    for (int v : shape.n)
        if (m < 2 * v)
            throw std::invalid_argument("sample_core_game: infeasible shape (m < 2 n_j)");
    for (;;) {
        GameInstance inst = sample_game(m, shape, rng);
        bool core = true;
        for (int c = 0; c < inst.gamma.cols() && core; ++c)
            if (inst.gamma.col_degree(c) < 2) core = false;
        if (core) return inst;
    }
}

GameSpaceEnumerator::GameSpaceEnumerator(int m, BlockShape shape) : m_(m), shape_(std::move(shape)) {
    total_ = checked_space_size(m_, shape_);
    choice_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(shape_.K), 0);
}

bool GameSpaceEnumerator::next(BitMatrix& out) {
    if (index_ >= total_) return false;
    out = BitMatrix(m_, shape_.total_cols());
    for (int i = 0; i < m_; ++i) {
        int off = 0;
        for (int j = 0; j < shape_.K; ++j) {
            out.set(i, off + choice_[static_cast<std::size_t>(i) * shape_.K + j], true);
            off += shape_.n[static_cast<std::size_t>(j)];
        }
    }
    ++index_;
    // odometer increment
    for (std::size_t d = choice_.size(); d-- > 0;) {
        const int limit = shape_.n[d % static_cast<std::size_t>(shape_.K)];
        if (++choice_[d] < limit) break;
        choice_[d] = 0;
    }
    return true;
}

void for_each_game(int m, const BlockShape& shape, const std::function<void(const BitMatrix&)>& fn) {
    GameSpaceEnumerator e(m, shape);
    BitMatrix g;
    while (e.next(g)) fn(g);
}

namespace {
bool min_col_degree_at_least_2(const BitMatrix& g) {
    for (int c = 0; c < g.cols(); ++c)
        if (g.col_degree(c) < 2) return false;
    return true;
}
}  // namespace

CoreSpaceEnumerator::CoreSpaceEnumerator(int m, BlockShape shape)
    : inner_(m, shape), feasible_(true) {
    // Each block contributes m ones over n_j columns, so m >= 2 n_j is needed.
    for (int v : shape.n)
        if (m < 2 * v) feasible_ = false;
}

bool CoreSpaceEnumerator::next(BitMatrix& out) {
    if (!feasible_) return false;
    while (inner_.next(out))
        if (min_col_degree_at_least_2(out)) return true;
    return false;
}

BlockSpaceEnumerator::BlockSpaceEnumerator(int m, int n)
    : inner_(m, BlockShape{1, {n}}) {}

bool BlockSpaceEnumerator::next(BitMatrix& out) { return inner_.next(out); }

Rational exact_EY(int m, int n, int ell) {
    BlockSpaceEnumerator e(m, n);
    BitMatrix g;
    long long count = 0;
    __int128 sum = 0;
    while (e.next(g)) {
        ++count;
        const auto by_card = critical_sets_by_cardinality(g);
        const auto it = by_card.find(ell);
        if (it != by_card.end()) sum += static_cast<__int128>(it->second);
    }
    if (count == 0) throw std::domain_error("exact_EY: empty block space");
    return Rational(sum, count);
}

Rational exact_EZ(int m, const BlockShape& shape, int ell) {
    CoreSpaceEnumerator e(m, shape);
    BitMatrix g;
    long long count = 0;
    __int128 sum = 0;
    while (e.next(g)) {
        ++count;
        const auto by_card = critical_sets_by_cardinality(g);
        const auto it = by_card.find(ell);
        if (it != by_card.end()) sum += static_cast<__int128>(it->second);
    }
    if (count == 0) throw std::domain_error("exact_EZ: empty 2-core space");
    return Rational(sum, count);
}

}  // namespace xorgame
