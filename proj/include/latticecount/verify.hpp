#ifndef LATTICECOUNT_VERIFY_HPP
#define LATTICECOUNT_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latticecount/oracle.hpp"
#include "latticecount/pattern.hpp"
#include "latticecount/table.hpp"

namespace latticecount {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    std::optional<CellMismatch> counterexample;
};

struct VerificationReport {
    std::string pattern;
    long max_n = 0;
    long max_m = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

struct VerifyOptions {
    long max_n = 8;
    long max_m = 8;
    std::size_t dfs_cap = oracle::kDefaultDfsCap;
    std::size_t dfs_limit = 18; // brute force only covers cells with n + m <= min(cap, limit)
};

/// Cross-checks every engine, boundary, polynomial fit, operator identity and
/// applicable closed form for one depth-zero pattern with a >= 2. Throws
/// DepthNonzero or PatternTooShort for other patterns; failed checks are
/// reported, not thrown.
VerificationReport verify_pattern(const Pattern& pattern, const VerifyOptions& options);

/// r^a with a >= 2
bool is_r_power(const Pattern& p);
/// r(ur)^k with k >= 1; returns k
std::optional<long> r_ur_power(const Pattern& p);

} // namespace latticecount

#endif
