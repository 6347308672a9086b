#include "xorgame/bitmatrix.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace xorgame {

int BitMatrix::row_popcount(int i) const {
    const std::uint64_t* r = row(i);
    int c = 0;
    for (int w = 0; w < wpr_; ++w) c += std::popcount(r[w]);
    return c;
}

int BitMatrix::col_degree(int j) const {
    int d = 0;
    for (int i = 0; i < rows_; ++i) d += get(i, j);
    return d;
}

bool BitMatrix::row_is_zero(int i) const {
    const std::uint64_t* r = row(i);
    for (int w = 0; w < wpr_; ++w)
        if (r[w]) return false;
    return true;
}

std::vector<int> BitMatrix::row_ones(int i) const {
    std::vector<int> out;
    const std::uint64_t* r = row(i);
    for (int w = 0; w < wpr_; ++w) {
        std::uint64_t x = r[w];
        while (x) {
            out.push_back(w * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return out;
}

BitMatrix BitMatrix::submatrix(const std::vector<int>& keep_rows, const std::vector<int>& keep_cols) const {
    BitMatrix out(static_cast<int>(keep_rows.size()), static_cast<int>(keep_cols.size()));
    for (std::size_t i = 0; i < keep_rows.size(); ++i)
        for (std::size_t j = 0; j < keep_cols.size(); ++j)
            if (get(keep_rows[i], keep_cols[j])) out.set(static_cast<int>(i), static_cast<int>(j), true);
    return out;
}

void write_system(std::ostream& os, const BitMatrix& m, const BitVec& s) {
    os << m.rows() << ' ' << m.cols() << '\n';
    std::string line;
    for (int i = 0; i < m.rows(); ++i) {
        line.assign(static_cast<std::size_t>(m.cols()), '0');
        for (int j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) line[static_cast<std::size_t>(j)] = '1';
        os << line << '\n';
    }
    line.assign(static_cast<std::size_t>(m.rows()), '0');
    for (int i = 0; i < m.rows(); ++i)
        if (s.get(i)) line[static_cast<std::size_t>(i)] = '1';
    os << line << '\n';
}

namespace {
std::string next_token_line(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return line;
    }
    throw std::runtime_error("system file: unexpected end of input");
}
}  // namespace

void read_system(std::istream& is, BitMatrix& m, BitVec& s) {
    std::istringstream header(next_token_line(is));
    int rows = -1, cols = -1;
    if (!(header >> rows >> cols) || rows < 0 || cols < 0)
        throw std::runtime_error("system file: bad header, expected 'm n'");
    m = BitMatrix(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const std::string line = next_token_line(is);
        if (static_cast<int>(line.size()) != cols)
            throw std::runtime_error("system file: row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < cols; ++j) {
            if (line[static_cast<std::size_t>(j)] == '1')
                m.set(i, j, true);
            else if (line[static_cast<std::size_t>(j)] != '0')
                throw std::runtime_error("system file: row characters must be 0 or 1");
        }
    }
    const std::string sline = rows > 0 ? next_token_line(is) : std::string();
    if (static_cast<int>(sline.size()) != rows)
        throw std::runtime_error("system file: s line has wrong length");
    s = BitVec(rows);
    for (int i = 0; i < rows; ++i) {
        if (sline[static_cast<std::size_t>(i)] == '1')
            s.set(i, true);
        else if (sline[static_cast<std::size_t>(i)] != '0')
            throw std::runtime_error("system file: s characters must be 0 or 1");
    }
}

}  // namespace xorgame
