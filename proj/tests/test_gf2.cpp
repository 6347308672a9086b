#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "oracles.hpp"
#include "xorgame/gf2.hpp"
#include "xorgame/rng.hpp"

using namespace xorgame;

namespace {

BitMatrix identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix random_matrix(int rows, int cols, Rng& rng, double density = 0.5) {
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

}  // namespace

TEST_CASE("rank: identities and duplicates") {
    CHECK(rank(identity(3)) == 3);
    BitMatrix dup(2, 2);
    dup.set(0, 0, true);
    dup.set(0, 1, true);
    dup.set(1, 0, true);
    dup.set(1, 1, true);
    CHECK(rank(dup) == 1);
    CHECK(rank(BitMatrix(0, 5)) == 0);
}

TEST_CASE("rank agrees with the xor-basis oracle on random matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = 1 + static_cast<int>(rng.below(12));
        const int cols = 1 + static_cast<int>(rng.below(10));
        const BitMatrix m = random_matrix(rows, cols, rng, 0.2 + 0.6 * rng.uniform01());
        CHECK(rank(m) == oracle::rank_basis(m));
    }
}

TEST_CASE("solve: stated examples") {
    BitVec s(3);
    s.set(0, true);
    s.set(2, true);
    const auto x = solve(identity(3), s);
    REQUIRE(x.has_value());
    CHECK(x->get(0));
    CHECK(!x->get(1));
    CHECK(x->get(2));

    BitMatrix dup(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) dup.set(i, j, true);
    BitVec bad(2);
    bad.set(0, true);
    CHECK(!solve(dup, bad).has_value());

    BitVec good(2);
    good.set(0, true);
    good.set(1, true);
    const auto w = solve(dup, good);
    REQUIRE(w.has_value());
    CHECK((w->get(0) ^ w->get(1)) == true);

    BitVec wrong_len(3);
    CHECK_THROWS_AS(solve(dup, wrong_len), std::invalid_argument);
}

TEST_CASE("solve returns verified witnesses; absence means no solution") {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = 1 + static_cast<int>(rng.below(10));
        const int cols = 1 + static_cast<int>(rng.below(8));
        const BitMatrix m = random_matrix(rows, cols, rng);
        // consistent by construction
        BitVec planted(cols);
        for (int j = 0; j < cols; ++j) planted.set(j, rng.coin());
        const BitVec s = mat_vec(m, planted);
        const auto x = solve(m, s);
        REQUIRE(x.has_value());
        CHECK(mat_vec(m, *x) == s);

        // random s: verify presence/absence against exhaustive search
        BitVec sr(rows);
        for (int i = 0; i < rows; ++i) sr.set(i, rng.coin());
        const auto xr = solve(m, sr);
        bool any = false;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cols) && !any; ++bits) {
            BitVec cand(cols);
            for (int j = 0; j < cols; ++j) cand.set(j, (bits >> j) & 1);
            if (mat_vec(m, cand) == sr) any = true;
        }
        CHECK(xr.has_value() == any);
        if (xr) CHECK(mat_vec(m, *xr) == sr);
        CHECK(is_consistent(m, sr) == any);
    }
}

TEST_CASE("count_solutions_log2") {
    BitVec s(4);
    s.set(1, true);
    CHECK(count_solutions_log2(identity(4), s) == 0);

    const BitMatrix zero(2, 3);
    CHECK(count_solutions_log2(zero, BitVec(2)) == 3);

    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const BitMatrix m = random_matrix(4, 3, rng);
        BitVec sr(4);
        for (int i = 0; i < 4; ++i) sr.set(i, rng.coin());
        long brute = 0;
        for (std::uint64_t bits = 0; bits < 8; ++bits) {
            BitVec cand(3);
            for (int j = 0; j < 3; ++j) cand.set(j, (bits >> j) & 1);
            if (mat_vec(m, cand) == sr) ++brute;
        }
        const auto lg = count_solutions_log2(m, sr);
        if (brute == 0) {
            CHECK(!lg.has_value());
        } else {
            REQUIRE(lg.has_value());
            CHECK((1L << *lg) == brute);
        }
    }
}

TEST_CASE("critical sets: examples") {
    CHECK(critical_sets_bruteforce(identity(3)) == 0);

    BitMatrix two(2, 3);
    two.set(0, 1, true);
    two.set(1, 1, true);
    CHECK(critical_sets_bruteforce(two) == 1);
    const auto by2 = critical_sets_by_cardinality(two);
    CHECK(by2.size() == 1);
    CHECK(by2.at(2) == 1);

    BitMatrix three(3, 3);
    for (int i = 0; i < 3; ++i) three.set(i, 2, true);
    const auto by3 = critical_sets_by_cardinality(three);
    CHECK(by3.size() == 1);
    CHECK(by3.at(2) == 3);  // each pair cancels; the triple does not

    BitMatrix big(25, 2);
    CHECK_THROWS_AS(critical_sets_bruteforce(big), std::invalid_argument);
}

TEST_CASE("critical set count equals 2^(m-rank) - 1") {
    Rng rng(14);
    for (int trial = 0; trial < 400; ++trial) {
        const int rows = 1 + static_cast<int>(rng.below(12));
        const int cols = 1 + static_cast<int>(rng.below(10));
        const BitMatrix m = random_matrix(rows, cols, rng, 0.15 + 0.7 * rng.uniform01());
        const std::uint64_t expect = (std::uint64_t{1} << (rows - rank(m))) - 1;
        CHECK(critical_sets_bruteforce(m) == expect);
    }
}

TEST_CASE("critical sets by cardinality agree with the naive oracle") {
    Rng rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        const BitMatrix m = random_matrix(6, 4, rng, 0.4);
        const auto got = critical_sets_by_cardinality(m);
        const auto want = oracle::critical_by_card_naive(m);
        CHECK(got == want);
        std::uint64_t total = 0;
        for (const auto& [card, count] : got) total += count;
        CHECK(total == critical_sets_bruteforce(m));
    }
}

TEST_CASE("no singleton critical sets when every row is nonzero") {
    Rng rng(16);
    for (int trial = 0; trial < 100; ++trial) {
        const int rows = 1 + static_cast<int>(rng.below(8));
        BitMatrix m = random_matrix(rows, 6, rng, 0.3);
        bool all_nonzero = true;
        for (int i = 0; i < rows; ++i)
            if (m.row_is_zero(i)) all_nonzero = false;
        if (!all_nonzero) continue;
        const auto by = critical_sets_by_cardinality(m);
        CHECK(by.count(1) == 0);
    }
}

TEST_CASE("solvability fraction is exactly 2^(rank - rows)") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const int rows = 1 + static_cast<int>(rng.below(10));
        const int cols = 1 + static_cast<int>(rng.below(8));
        const BitMatrix m = random_matrix(rows, cols, rng);
        const int r = rank(m);
        long consistent = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rows); ++bits) {
            BitVec s(rows);
            for (int i = 0; i < rows; ++i) s.set(i, (bits >> i) & 1);
            if (is_consistent(m, s)) ++consistent;
        }
        CHECK(consistent == (1L << r));
    }
}

TEST_CASE("system text round-trip") {
    Rng rng(18);
    const BitMatrix m = random_matrix(5, 7, rng);
    BitVec s(5);
    for (int i = 0; i < 5; ++i) s.set(i, rng.coin());
    std::stringstream ss;
    write_system(ss, m, s);
    BitMatrix m2;
    BitVec s2;
    read_system(ss, m2, s2);
    CHECK(m == m2);
    CHECK(s == s2);

    std::stringstream bad("2 2\n01\n0x\n00\n");
    CHECK_THROWS_AS(read_system(bad, m2, s2), std::runtime_error);
}
