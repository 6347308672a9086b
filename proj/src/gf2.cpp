#include "xorgame/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace xorgame {

namespace {

struct Elimination {
    BitMatrix m;
    BitVec s;
    std::vector<int> pivot_cols;   // pivot_cols[r] = column of pivot row r
    bool consistent = true;
};

// Gauss-Jordan on a copy; optionally carries s through the row operations.
Elimination eliminate(const BitMatrix& in, const BitVec* s_in) {
    Elimination e{in, s_in ? *s_in : BitVec(in.rows()), {}, true};
    const int rows = in.rows(), cols = in.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (e.m.get(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        e.m.swap_rows(r, piv);
        if (s_in && e.s.get(r) != e.s.get(piv)) {
            e.s.flip(r);
            e.s.flip(piv);
        }
        for (int i = 0; i < rows; ++i) {
            if (i != r && e.m.get(i, c)) {
                e.m.xor_row_into(r, i);
                if (s_in && e.s.get(r)) e.s.flip(i);
            }
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    if (s_in) {
        for (int i = r; i < rows; ++i)
            if (e.s.get(i)) {
                e.consistent = false;
                break;
            }
    }
    return e;
}

}  // namespace

int rank(const BitMatrix& m) {
    return static_cast<int>(eliminate(m, nullptr).pivot_cols.size());
}

std::optional<BitVec> solve(const BitMatrix& m, const BitVec& s) {
    if (s.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Elimination e = eliminate(m, &s);
    if (!e.consistent) return std::nullopt;
    BitVec x(m.cols());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        if (e.s.get(static_cast<int>(r))) x.set(e.pivot_cols[r], true);
    return x;
}

bool is_consistent(const BitMatrix& m, const BitVec& s) {
    if (s.size() != m.rows()) throw std::invalid_argument("is_consistent: dimension mismatch");
    // Forward elimination only; consistency needs no back-substitution.
    BitMatrix a = m;
    BitVec b = s;
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a.get(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        a.swap_rows(r, piv);
        if (b.get(r) != b.get(piv)) {
            b.flip(r);
            b.flip(piv);
        }
        for (int i = r + 1; i < rows; ++i) {
            if (a.get(i, c)) {
                a.xor_row_into(r, i);
                if (b.get(r)) b.flip(i);
            }
        }
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (b.get(i) && a.row_is_zero(i)) return false;
    return true;
}

std::optional<int> count_solutions_log2(const BitMatrix& m, const BitVec& s) {
    if (s.size() != m.rows()) throw std::invalid_argument("count_solutions_log2: dimension mismatch");
    Elimination e = eliminate(m, &s);
    if (!e.consistent) return std::nullopt;
    return m.cols() - static_cast<int>(e.pivot_cols.size());
}

namespace {

constexpr int kEnumBudgetRows = 24;

// Gray-code walk over all non-empty row subsets, XORing one row per step.
template <typename Visit>
void for_each_subset_sum(const BitMatrix& m, Visit visit) {
    const int rows = m.rows();
    if (rows > kEnumBudgetRows)
        throw std::invalid_argument("critical sets: enumeration budget is 24 rows");
    const int wpr = m.words_per_row();
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(wpr), 0);
    const std::uint64_t total = rows >= 0 ? (std::uint64_t{1} << rows) : 0;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int flip = std::countr_zero(i);
        const std::uint64_t* r = m.row(flip);
        bool zero = true;
        for (int w = 0; w < wpr; ++w) {
            acc[static_cast<std::size_t>(w)] ^= r[w];
            if (acc[static_cast<std::size_t>(w)]) zero = false;
        }
        if (zero) visit(std::popcount(i ^ (i >> 1)));
    }
}

}  // namespace

std::uint64_t critical_sets_bruteforce(const BitMatrix& m) {
    std::uint64_t count = 0;
    for_each_subset_sum(m, [&](int) { ++count; });
    return count;
}

std::map<int, std::uint64_t> critical_sets_by_cardinality(const BitMatrix& m) {
    std::map<int, std::uint64_t> out;
    for_each_subset_sum(m, [&](int card) { ++out[card]; });
    return out;
}

}  // namespace xorgame
