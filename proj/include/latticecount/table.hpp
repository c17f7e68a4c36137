#ifndef LATTICECOUNT_TABLE_HPP
#define LATTICECOUNT_TABLE_HPP

#include <optional>
#include <vector>

#include "latticecount/numeric.hpp"
#include "latticecount/pattern.hpp"

namespace latticecount {

/// Counts s_n(m) for 0 <= n <= max_n, 0 <= m <= max_m. Cells with m < n - 1
/// lie below the weak boundary; they are stored as zero and reported invalid.
class BallotTable {
public:
    BallotTable() = default;
    BallotTable(Pattern pattern, long max_n, long max_m);

    const Pattern& pattern() const noexcept { return pattern_; }
    long max_n() const noexcept { return max_n_; }
    long max_m() const noexcept { return max_m_; }

    static bool valid(long n, long m) noexcept { return m >= n - 1; }
    bool contains(long n, long m) const noexcept {
        return n >= 0 && m >= 0 && n <= max_n_ && m <= max_m_;
    }

    const BigInt& at(long n, long m) const;
    BigInt& at(long n, long m);

    friend bool operator==(const BallotTable&, const BallotTable&) = default;

private:
    Pattern pattern_;
    long max_n_ = -1;
    long max_m_ = -1;
    std::vector<BigInt> cells_; // column-major: index n * (max_m + 1) + m
};

struct CellMismatch {
    long n = 0;
    long m = 0;
};

/// First valid cell (in column-major order) where the two tables differ over
/// their common region; nothing if they agree.
std::optional<CellMismatch> first_difference(const BallotTable& lhs, const BallotTable& rhs);

} // namespace latticecount

#endif
