#ifndef LATTICECOUNT_PATTERN_HPP
#define LATTICECOUNT_PATTERN_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace latticecount {

enum class Step : unsigned char { Up, Right };

/// A contiguous step string over {u, r}. May be empty only as a
/// default-constructed value; every analysis entry point rejects it.
class Pattern {
public:
    Pattern() = default;
    explicit Pattern(std::vector<Step> steps) : steps_(std::move(steps)) {}

    const std::vector<Step>& steps() const noexcept { return steps_; }
    std::size_t size() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }
    Step operator[](std::size_t i) const { return steps_[i]; }

    std::size_t count(Step s) const noexcept;
    Pattern slice(std::size_t first, std::size_t length) const;

    /// Lower-case rendering, e.g. "urruurr".
    std::string str() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::vector<Step> steps_;
};

struct BifixInfo {
    Pattern bifix;
    long trunc_r = 0; // r's in the pattern with this bifix removed from the end
    long trunc_u = 0; // u's in the same truncated pattern

    friend bool operator==(const BifixInfo&, const BifixInfo&) = default;
};

struct PatternProfile {
    Pattern pattern;
    long r_count = 0;
    long u_count = 0;
    long depth = 0;
    bool depth_zero = false;
    std::vector<BifixInfo> bifixes; // increasing bifix length

    friend bool operator==(const PatternProfile&, const PatternProfile&) = default;
};

/// Accepts u, r, U, R. Throws EmptyPattern or BadCharError.
Pattern parse_pattern(std::string_view text);

/// Reverse-complement: reversed order with u and r swapped.
Pattern reverse_pattern(const Pattern& p);

/// Border lengths of p (0 < len < |p|), increasing, via the failure function.
std::vector<std::size_t> border_lengths(const Pattern& p);

/// Same set by direct prefix/suffix comparison. Quadratic; used for checking.
std::vector<std::size_t> border_lengths_naive(const Pattern& p);

/// True iff every prefix has at least as many u's as r's.
bool is_ballot(const Pattern& p);

/// True iff every suffix s has d(s) = #r - #u >= 0.
bool is_depth_zero(const Pattern& p);

PatternProfile profile(const Pattern& p);

/// All patterns over {u, r} of the given length, in lexicographic order (u < r).
std::vector<Pattern> all_patterns(std::size_t length);

} // namespace latticecount

#endif
