#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "xorgame/bitmatrix.hpp"

namespace xorgame {

/// GF(2) rank by row reduction on a working copy.
int rank(const BitMatrix& m);

/// Solves Mx = s. Returns an assignment (free variables zero) or nullopt if
/// the system is inconsistent. Throws on dimension mismatch.
std::optional<BitVec> solve(const BitMatrix& m, const BitVec& s);

/// Consistency of Mx = s without extracting a witness.
bool is_consistent(const BitMatrix& m, const BitVec& s);

/// log2 of the number of solutions: cols - rank if consistent, else nullopt.
std::optional<int> count_solutions_log2(const BitMatrix& m, const BitVec& s);

/// Number of non-empty row subsets whose GF(2) sum is the zero vector,
/// by exhaustive subset enumeration. Requires rows <= 24.
std::uint64_t critical_sets_bruteforce(const BitMatrix& m);

/// Critical row set counts keyed by subset cardinality. Requires rows <= 24.
/// Cardinalities with zero count are omitted.
std::map<int, std::uint64_t> critical_sets_by_cardinality(const BitMatrix& m);

}  // namespace xorgame
