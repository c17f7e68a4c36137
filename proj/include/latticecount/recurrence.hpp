#ifndef LATTICECOUNT_RECURRENCE_HPP
#define LATTICECOUNT_RECURRENCE_HPP

#include <optional>
#include <vector>

#include "latticecount/numeric.hpp"
#include "latticecount/pattern.hpp"
#include "latticecount/polynomial.hpp"
#include "latticecount/table.hpp"

namespace latticecount {

/// coeff * F_{n - drop}(m - shift)
struct RecurrenceTerm {
    long drop = 1;
    long shift = 0;
    BigInt coeff;

    friend bool operator==(const RecurrenceTerm&, const RecurrenceTerm&) = default;
};

/// F_n(m) = F_n(m - 1) + sum of terms, with boundary x_n = n + boundary_offset.
/// The F_n(m - 1) term is implicit. Terms are sorted by (drop, shift).
struct RecurrenceSpec {
    std::vector<RecurrenceTerm> terms;
    long boundary_offset = -1;
    long truncation_order = 0;

    friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

/// Inclusion-exclusion over bifix overlaps: every multiset of truncated pieces
/// appended to the pattern contributes -(-1)^k k!/(i_1!...i_m!) at
/// drop a + sum i_j b_j, shift c + sum i_j d_j. Terms with drop > order are dropped.
RecurrenceSpec build_recurrence(const PatternProfile& pr, long truncation_order);

struct Theorem1Report {
    BigInt drop_one_sum;
    bool drop_one_nonzero = false;
    bool shifts_bounded = false;                 // shift <= drop + 1 for every term
    std::optional<RecurrenceTerm> first_violation;

    bool ok() const noexcept { return drop_one_nonzero && shifts_bounded; }
};

Theorem1Report validate_theorem1(const RecurrenceSpec& spec);

/// Column-major sweep with F_0(m) = 1 and F_n(n - 1) = 0. Throws
/// TruncationTooLow, InvalidArgument for specs failing the polynomiality
/// conditions, and BelowBoundary if a term would read under the boundary.
BallotTable generate_table(const RecurrenceSpec& spec, const Pattern& pattern, long max_n, long max_m);

/// Convenience: profile -> recurrence (order max_n) -> table. Requires a depth-zero pattern, a >= 2.
BallotTable recurrence_table(const Pattern& pattern, long max_n, long max_m);

/// Degree-n interpolant of column n through m = n-1, ..., 2n-1 (m = 0 for n = 0),
/// checked against every stored valid cell in the column.
RationalPolynomial fit_column_polynomial(const BallotTable& table, long n);

} // namespace latticecount

#endif
