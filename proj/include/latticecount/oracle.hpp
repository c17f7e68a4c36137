#ifndef LATTICECOUNT_ORACLE_HPP
#define LATTICECOUNT_ORACLE_HPP

#include <cstddef>

#include "latticecount/numeric.hpp"
#include "latticecount/pattern.hpp"
#include "latticecount/table.hpp"

// Ground-truth counters. Neither uses bifixes or the inclusion-exclusion
// recurrence, and both accept patterns of any depth.
namespace latticecount::oracle {

inline constexpr std::size_t kDefaultDfsCap = 26;

/// kDefaultDfsCap unless LATTICECOUNT_CAP holds a nonnegative integer.
std::size_t default_dfs_cap();

/// Brute-force enumeration of every ballot word with n r's and m u's.
/// Throws CapExceeded when n + m > cap.
BigInt count_dfs(const Pattern& p, long n, long m, std::size_t cap = default_dfs_cap());

/// All cells at once from a single enumeration; cap applies to max_n + max_m.
BallotTable dfs_table(const Pattern& p, long max_n, long max_m,
                      std::size_t cap = default_dfs_cap());

/// Dynamic program over (x, y, matcher state) with the full-match state removed.
BallotTable automaton_table(const Pattern& p, long max_n, long max_m);
BigInt count_automaton(const Pattern& p, long n, long m);
BigInt dyck_count(const Pattern& p, long n);

/// Ballot paths to (n, m) with no pattern restriction.
BigInt ballot_count(long n, long m);

BigInt catalan(long n);

} // namespace latticecount::oracle

#endif
