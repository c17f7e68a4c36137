#ifndef LATTICECOUNT_POLYNOMIAL_HPP
#define LATTICECOUNT_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "latticecount/numeric.hpp"

namespace latticecount {

/// Dense polynomial in x with exact rational coefficients, ascending powers.
/// Trailing zeros are always trimmed; the zero polynomial has no coefficients.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);
    RationalPolynomial(std::initializer_list<Rational> coeffs);

    static RationalPolynomial constant(const Rational& c);
    static RationalPolynomial x();
    /// x - root
    static RationalPolynomial linear_root(const Rational& root);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(long k) const;
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& x) const;

    /// p(x + s)
    RationalPolynomial shifted(const Rational& s) const;
    /// p(x) / x; throws NotBasic unless p(0) == 0.
    RationalPolynomial divided_by_x() const;

    RationalPolynomial& operator+=(const RationalPolynomial& rhs);
    RationalPolynomial& operator-=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const Rational& k);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& k) { return a *= k; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// {"0", "-1/2", "1/2"}
    std::vector<std::string> to_strings() const;
    static RationalPolynomial from_strings(const std::vector<std::string>& coeffs);
    std::string str() const; // "[0, -1/2, 1/2]"

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree < points.size() through the given (x, y) pairs,
/// by Newton divided differences. Abscissae must be distinct.
RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

} // namespace latticecount

#endif
