#ifndef LATTICECOUNT_SERIES_HPP
#define LATTICECOUNT_SERIES_HPP

#include <cstddef>
#include <vector>

#include "latticecount/numeric.hpp"

namespace latticecount {

/// Power series in t truncated after t^order, exact rational coefficients.
/// Binary operations require equal orders.
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(long order);
    TruncSeries(long order, std::vector<Rational> coeffs); // padded or truncated to order

    static TruncSeries one(long order);
    static TruncSeries monomial(long order, long power, const Rational& c = 1);

    long order() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](long k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    Rational& operator[](long k) { return coeffs_[static_cast<std::size_t>(k)]; }
    bool is_zero() const;

    TruncSeries& operator+=(const TruncSeries& rhs);
    TruncSeries& operator-=(const TruncSeries& rhs);
    TruncSeries& operator*=(const Rational& k);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const Rational& k) { return a *= k; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

    TruncSeries pow(long k) const;
    TruncSeries derivative() const; // same order, top coefficient zero

private:
    std::vector<Rational> coeffs_;
};

/// Multiplicative inverse; throws NotInvertible for a zero constant term.
TruncSeries series_inverse(const TruncSeries& s);

/// log(s) for s(0) = 1; throws BadConstantTerm otherwise.
TruncSeries series_log(const TruncSeries& s);

/// exp(s) for s(0) = 0; throws BadConstantTerm otherwise.
TruncSeries series_exp(const TruncSeries& s);

} // namespace latticecount

#endif
