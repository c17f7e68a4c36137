#include "latticecount/recurrence.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "latticecount/error.hpp"

namespace latticecount {

namespace {

struct Piece {
    long r = 0;
    long u = 0;
};

class TermCollector {
public:
    TermCollector(const PatternProfile& pr, long order) : pr_(pr), order_(order) {
        for (const auto& b : pr.bifixes)
            pieces_.push_back({b.trunc_r, b.trunc_u});
        counts_.assign(pieces_.size(), 0);
    }

    std::map<std::pair<long, long>, BigInt> collect() {
        walk(0, pr_.r_count, pr_.u_count);
        return std::move(terms_);
    }

private:
    void walk(std::size_t j, long drop, long shift) {
        if (drop > order_)
            return;
        if (j == pieces_.size()) {
            long k = 0;
            BigInt denom = 1;
            for (long c : counts_) {
                k += c;
                denom *= factorial(c);
            }
            BigInt multinomial = factorial(k) / denom;
            // -(-1)^k * multinomial
            if (k % 2 == 0)
                multinomial = -multinomial;
            terms_[{drop, shift}] += multinomial;
            return;
        }
        // Truncated pieces have at least one r, so drop grows and the walk terminates.
        for (long c = 0; drop + c * pieces_[j].r <= order_; ++c) {
            counts_[j] = c;
            walk(j + 1, drop + c * pieces_[j].r, shift + c * pieces_[j].u);
        }
        counts_[j] = 0;
    }

    const PatternProfile& pr_;
    long order_;
    std::vector<Piece> pieces_;
    std::vector<long> counts_;
    std::map<std::pair<long, long>, BigInt> terms_;
};

} // namespace

RecurrenceSpec build_recurrence(const PatternProfile& pr, long truncation_order) {
    if (!pr.depth_zero)
        throw Error(ErrorCode::DepthNonzero, "pattern " + pr.pattern.str() + " is not depth-zero");
    if (pr.r_count < 2)
        throw Error(ErrorCode::PatternTooShort,
                    "pattern " + pr.pattern.str() + " has fewer than two r steps");
    if (truncation_order < 1)
        throw Error(ErrorCode::InvalidArgument, "truncation order must be positive");

    auto merged = TermCollector(pr, truncation_order).collect();
    merged[{1, 0}] += 1; // paths arriving by a final r step

    RecurrenceSpec spec;
    spec.truncation_order = truncation_order;
    for (auto& [key, coeff] : merged)
        if (coeff != 0)
            spec.terms.push_back({key.first, key.second, std::move(coeff)});
    return spec;
}

Theorem1Report validate_theorem1(const RecurrenceSpec& spec) {
    Theorem1Report report;
    report.drop_one_sum = 0;
    report.shifts_bounded = true;
    for (const auto& t : spec.terms) {
        if (t.drop == 1)
            report.drop_one_sum += t.coeff;
        // x_n - x_{n-i} + 1 = i + 1 for x_n = n + const
        if (t.shift > t.drop + 1 && report.shifts_bounded) {
            report.shifts_bounded = false;
            report.first_violation = t;
        }
    }
    report.drop_one_nonzero = report.drop_one_sum != 0;
    return report;
}

BallotTable generate_table(const RecurrenceSpec& spec, const Pattern& pattern, long max_n, long max_m) {
    if (spec.boundary_offset != -1)
        throw Error(ErrorCode::InvalidArgument, "only the ballot boundary x_n = n - 1 is supported");
    if (spec.truncation_order < max_n)
        throw Error(ErrorCode::TruncationTooLow,
                    "truncation order " + std::to_string(spec.truncation_order) + " below max_n " +
                        std::to_string(max_n));
    const auto report = validate_theorem1(spec);
    if (!report.ok())
        throw Error(ErrorCode::InvalidArgument, "recurrence fails the polynomiality conditions");
    for (const auto& t : spec.terms)
        if (t.drop < 1 || t.shift < 0)
            throw Error(ErrorCode::InvalidArgument, "terms need drop >= 1 and shift >= 0");

    BallotTable table(pattern, max_n, max_m);
    auto read = [&](long n, long m) -> BigInt {
        if (n < 0)
            return 0;
        if (m < n - 1)
            throw Error(ErrorCode::BelowBoundary, "recurrence reads F_" + std::to_string(n) + "(" +
                                                      std::to_string(m) + ") below the boundary");
        if (m == n - 1)
            return n == 0 ? 1 : 0;
        if (n == 0)
            return 1;
        return table.at(n, m);
    };

    for (long m = 0; m <= max_m; ++m)
        table.at(0, m) = 1;
    for (long n = 1; n <= max_n; ++n) {
        if (n - 1 <= max_m)
            table.at(n, n - 1) = 0;
        for (long m = n; m <= max_m; ++m) {
            BigInt value = table.at(n, m - 1);
            for (const auto& t : spec.terms)
                value += t.coeff * read(n - t.drop, m - t.shift);
            table.at(n, m) = std::move(value);
        }
    }
    return table;
}

BallotTable recurrence_table(const Pattern& pattern, long max_n, long max_m) {
    return generate_table(build_recurrence(profile(pattern), std::max(max_n, 1L)), pattern, max_n, max_m);
}

RationalPolynomial fit_column_polynomial(const BallotTable& table, long n) {
    if (n < 0 || n > table.max_n())
        throw Error(ErrorCode::InvalidArgument, "column " + std::to_string(n) + " not in table");
    const long first = n == 0 ? 0 : n - 1;
    if (first + n > table.max_m())
        throw Error(ErrorCode::InsufficientPoints,
                    "column " + std::to_string(n) + " needs rows up to " + std::to_string(first + n));

    std::vector<std::pair<Rational, Rational>> points;
    for (long m = first; m <= first + n; ++m)
        points.emplace_back(Rational(m), Rational(table.at(n, m)));
    RationalPolynomial poly = interpolate(points);

    for (long m = first; m <= table.max_m(); ++m)
        if (poly(Rational(m)) != table.at(n, m))
            throw Error(ErrorCode::PolynomialMismatch,
                        "column " + std::to_string(n) + " departs from its interpolant at m = " +
                            std::to_string(m));
    return poly;
}

} // namespace latticecount
