#include "latticecount/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>
#include <vector>

#include "latticecount/error.hpp"

namespace latticecount::oracle {

namespace {

void require_pattern(const Pattern& p) {
    if (p.empty())
        throw Error(ErrorCode::EmptyPattern, "pattern is empty");
}

void require_bounds(long n, long m) {
    if (n < 0 || m < 0)
        throw Error(ErrorCode::InvalidArgument, "n and m must be nonnegative");
}

class Enumerator {
public:
    Enumerator(const Pattern& p, BallotTable& table) : pattern_(p), table_(table) {}

    void run() { visit(0, 0); }

private:
    bool ends_with_pattern() const {
        const auto& ps = pattern_.steps();
        if (word_.size() < ps.size())
            return false;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (word_[word_.size() - ps.size() + i] != ps[i])
                return false;
        return true;
    }

    void visit(long x, long y) {
        ++table_.at(x, y);
        if (y < table_.max_m())
            step(Step::Up, x, y + 1);
        if (x < table_.max_n() && x + 1 <= y)
            step(Step::Right, x + 1, y);
    }

    void step(Step s, long x, long y) {
        word_.push_back(s);
        if (!ends_with_pattern())
            visit(x, y);
        word_.pop_back();
    }

    const Pattern& pattern_;
    BallotTable& table_;
    std::vector<Step> word_;
};

} // namespace

std::size_t default_dfs_cap() {
    if (const char* env = std::getenv("LATTICECOUNT_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && env[0] != '-')
            return static_cast<std::size_t>(v);
    }
    return kDefaultDfsCap;
}

BallotTable dfs_table(const Pattern& p, long max_n, long max_m, std::size_t cap) {
    require_pattern(p);
    require_bounds(max_n, max_m);
    if (static_cast<std::size_t>(max_n + max_m) > cap)
        throw Error(ErrorCode::CapExceeded,
                    "n + m = " + std::to_string(max_n + max_m) + " exceeds the enumeration cap " +
                        std::to_string(cap));
    BallotTable table(p, max_n, max_m);
    Enumerator(p, table).run();
    return table;
}

BigInt count_dfs(const Pattern& p, long n, long m, std::size_t cap) {
    return dfs_table(p, n, m, cap).at(n, m);
}

BallotTable automaton_table(const Pattern& p, long max_n, long max_m) {
    require_pattern(p);
    require_bounds(max_n, max_m);
    const std::size_t len = p.size();

    std::vector<std::size_t> fail(len, 0);
    for (std::size_t i = 1, k = 0; i < len; ++i) {
        while (k > 0 && p[i] != p[k])
            k = fail[k - 1];
        if (p[i] == p[k])
            ++k;
        fail[i] = k;
    }
    // next[state][letter]; state == len means p was just completed.
    std::vector<std::array<std::size_t, 2>> next(len);
    for (std::size_t state = 0; state < len; ++state) {
        for (Step s : {Step::Up, Step::Right}) {
            std::size_t k = state;
            while (k > 0 && p[k] != s)
                k = fail[k - 1];
            next[state][static_cast<std::size_t>(s)] = p[k] == s ? k + 1 : 0;
        }
    }

    const auto width = static_cast<std::size_t>(max_m + 1);
    std::vector<std::vector<BigInt>> dp(static_cast<std::size_t>((max_n + 1) * (max_m + 1)),
                                        std::vector<BigInt>(len));
    auto cell = [&](long x, long y) -> std::vector<BigInt>& {
        return dp[static_cast<std::size_t>(x) * width + static_cast<std::size_t>(y)];
    };
    cell(0, 0)[0] = 1;

    BallotTable table(p, max_n, max_m);
    for (long y = 0; y <= max_m; ++y) {
        for (long x = 0; x <= std::min(y, max_n); ++x) {
            const auto& here = cell(x, y);
            BigInt total = 0;
            for (std::size_t state = 0; state < len; ++state) {
                if (here[state] == 0)
                    continue;
                total += here[state];
                if (y < max_m) {
                    const std::size_t to = next[state][static_cast<std::size_t>(Step::Up)];
                    if (to < len)
                        cell(x, y + 1)[to] += here[state];
                }
                if (x < max_n && x + 1 <= y) {
                    const std::size_t to = next[state][static_cast<std::size_t>(Step::Right)];
                    if (to < len)
                        cell(x + 1, y)[to] += here[state];
                }
            }
            table.at(x, y) = total;
        }
    }
    return table;
}

BigInt count_automaton(const Pattern& p, long n, long m) {
    return automaton_table(p, n, m).at(n, m);
}

BigInt dyck_count(const Pattern& p, long n) { return count_automaton(p, n, n); }

BigInt ballot_count(long n, long m) {
    if (n < 0 || m < n)
        return 0;
    BigInt out = binomial(n + m, n) * (m - n + 1);
    out /= (m + 1);
    return out;
}

BigInt catalan(long n) {
    if (n < 0)
        return 0;
    BigInt out = binomial(2 * n, n);
    out /= (n + 1);
    return out;
}

} // namespace latticecount::oracle
