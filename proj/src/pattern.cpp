#include "latticecount/pattern.hpp"

#include <algorithm>
#include <cassert>

#include "latticecount/error.hpp"

namespace latticecount {

namespace {

void require_nonempty(const Pattern& p) {
    if (p.empty())
        throw Error(ErrorCode::EmptyPattern, "pattern is empty");
}

Step complement(Step s) { return s == Step::Up ? Step::Right : Step::Up; }

} // namespace

std::size_t Pattern::count(Step s) const noexcept {
    return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), s));
}

Pattern Pattern::slice(std::size_t first, std::size_t length) const {
    return Pattern(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(first),
                                     steps_.begin() + static_cast<std::ptrdiff_t>(first + length)));
}

std::string Pattern::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_)
        out.push_back(s == Step::Up ? 'u' : 'r');
    return out;
}

Pattern parse_pattern(std::string_view text) {
    if (text.empty())
        throw Error(ErrorCode::EmptyPattern, "pattern is empty");
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'u':
        case 'U': steps.push_back(Step::Up); break;
        case 'r':
        case 'R': steps.push_back(Step::Right); break;
        default: throw BadCharError(i, text[i]);
        }
    }
    return Pattern(std::move(steps));
}

Pattern reverse_pattern(const Pattern& p) {
    require_nonempty(p);
    std::vector<Step> out(p.steps().rbegin(), p.steps().rend());
    for (Step& s : out)
        s = complement(s);
    return Pattern(std::move(out));
}

std::vector<std::size_t> border_lengths(const Pattern& p) {
    const std::size_t n = p.size();
    if (n == 0)
        return {};
    // fail[i] = length of the longest proper border of p[0..i]
    std::vector<std::size_t> fail(n, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && p[i] != p[k])
            k = fail[k - 1];
        if (p[i] == p[k])
            ++k;
        fail[i] = k;
    }
    std::vector<std::size_t> out;
    for (std::size_t k = fail[n - 1]; k > 0; k = fail[k - 1])
        out.push_back(k);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> border_lengths_naive(const Pattern& p) {
    std::vector<std::size_t> out;
    const auto& s = p.steps();
    for (std::size_t len = 1; len < s.size(); ++len) {
        if (std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(len),
                       s.end() - static_cast<std::ptrdiff_t>(len)))
            out.push_back(len);
    }
    return out;
}

bool is_ballot(const Pattern& p) {
    long height = 0;
    for (Step s : p.steps()) {
        height += s == Step::Up ? 1 : -1;
        if (height < 0)
            return false;
    }
    return true;
}

bool is_depth_zero(const Pattern& p) {
    long d = 0;
    for (auto it = p.steps().rbegin(); it != p.steps().rend(); ++it) {
        d += *it == Step::Right ? 1 : -1;
        if (d < 0)
            return false;
    }
    return true;
}

PatternProfile profile(const Pattern& p) {
    require_nonempty(p);
    PatternProfile pr;
    pr.pattern = p;
    pr.r_count = static_cast<long>(p.count(Step::Right));
    pr.u_count = static_cast<long>(p.count(Step::Up));
    pr.depth = pr.r_count - pr.u_count;
    pr.depth_zero = is_depth_zero(p);
    assert(pr.depth_zero == is_ballot(reverse_pattern(p)));

    for (std::size_t len : border_lengths(p)) {
        const Pattern truncated = p.slice(0, p.size() - len);
        BifixInfo info;
        info.bifix = p.slice(0, len);
        info.trunc_r = static_cast<long>(truncated.count(Step::Right));
        info.trunc_u = static_cast<long>(truncated.count(Step::Up));
        // A depth-zero pattern never has a truncated piece dipping below zero depth.
        if (pr.depth_zero && info.trunc_r < info.trunc_u)
            throw Error(ErrorCode::DepthNonzero,
                        "depth-zero pattern " + p.str() + " has a bifix with negative truncated depth");
        pr.bifixes.push_back(std::move(info));
    }
    return pr;
}

std::vector<Pattern> all_patterns(std::size_t length) {
    std::vector<Pattern> out;
    const std::size_t total = std::size_t{1} << length;
    out.reserve(total);
    for (std::size_t bits = 0; bits < total; ++bits) {
        std::vector<Step> steps(length);
        for (std::size_t i = 0; i < length; ++i)
            steps[i] = (bits >> (length - 1 - i)) & 1U ? Step::Right : Step::Up;
        out.emplace_back(std::move(steps));
    }
    return out;
}

} // namespace latticecount
