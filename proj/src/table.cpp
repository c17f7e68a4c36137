#include "latticecount/table.hpp"

#include <algorithm>
#include <utility>

#include "latticecount/error.hpp"

namespace latticecount {

BallotTable::BallotTable(Pattern pattern, long max_n, long max_m)
    : pattern_(std::move(pattern)), max_n_(max_n), max_m_(max_m) {
    if (max_n < 0 || max_m < 0)
        throw Error(ErrorCode::InvalidArgument, "table bounds must be nonnegative");
    cells_.resize(static_cast<std::size_t>((max_n + 1) * (max_m + 1)));
}

const BigInt& BallotTable::at(long n, long m) const {
    if (!contains(n, m))
        throw Error(ErrorCode::InvalidArgument,
                    "cell (" + std::to_string(n) + ", " + std::to_string(m) + ") outside table");
    return cells_[static_cast<std::size_t>(n * (max_m_ + 1) + m)];
}

BigInt& BallotTable::at(long n, long m) {
    return const_cast<BigInt&>(std::as_const(*this).at(n, m));
}

std::optional<CellMismatch> first_difference(const BallotTable& lhs, const BallotTable& rhs) {
    const long max_n = std::min(lhs.max_n(), rhs.max_n());
    const long max_m = std::min(lhs.max_m(), rhs.max_m());
    for (long n = 0; n <= max_n; ++n)
        for (long m = std::max(0L, n - 1); m <= max_m; ++m)
            if (lhs.at(n, m) != rhs.at(n, m))
                return CellMismatch{n, m};
    return std::nullopt;
}

} // namespace latticecount
