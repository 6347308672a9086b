#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace xorgame {

/// Packed vector of bits (used for right-hand sides and solutions).
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }
    void flip(int i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool operator==(const BitVec& o) const = default;

    const std::vector<std::uint64_t>& words() const { return w_; }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Dense boolean matrix, bit-packed row-major into 64-bit words.
/// Rows are equations, columns are variables. Padding bits beyond the last
/// column of each row are kept zero.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(static_cast<std::size_t>(rows) * wpr_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return wpr_; }

    bool get(int i, int j) const {
        return (data_[static_cast<std::size_t>(i) * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(int i, int j, bool v) {
        std::uint64_t& w = data_[static_cast<std::size_t>(i) * wpr_ + (j >> 6)];
        const std::uint64_t mask = std::uint64_t{1} << (j & 63);
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }

    const std::uint64_t* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * wpr_; }
    std::uint64_t* row(int i) { return data_.data() + static_cast<std::size_t>(i) * wpr_; }

    void xor_row_into(int src, int dst) {
        std::uint64_t* d = row(dst);
        const std::uint64_t* s = row(src);
        for (int w = 0; w < wpr_; ++w) d[w] ^= s[w];
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        std::uint64_t* ra = row(a);
        std::uint64_t* rb = row(b);
        for (int w = 0; w < wpr_; ++w) std::swap(ra[w], rb[w]);
    }

    int row_popcount(int i) const;
    int col_degree(int j) const;
    bool row_is_zero(int i) const;

    /// Column indices of the ones in row i, ascending.
    std::vector<int> row_ones(int i) const;

    /// Submatrix on the given (ascending) row/column index lists, columns
    /// renumbered in order.
    BitMatrix submatrix(const std::vector<int>& keep_rows, const std::vector<int>& keep_cols) const;

    bool operator==(const BitMatrix& o) const = default;

    const std::vector<std::uint64_t>& words() const { return data_; }

  private:
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Text format: first line "m n", then m lines of n characters in {0,1},
/// then one line of m characters for s.
void write_system(std::ostream& os, const BitMatrix& m, const BitVec& s);
/// Parses the text format; throws std::runtime_error on malformed input.
void read_system(std::istream& is, BitMatrix& m, BitVec& s);

}  // namespace xorgame
