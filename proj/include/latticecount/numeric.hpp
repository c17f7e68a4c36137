#ifndef LATTICECOUNT_NUMERIC_HPP
#define LATTICECOUNT_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace latticecount {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact decimal ("123") or "p/q" rendering.
std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

/// Inverse of to_string; throws BadDocument on malformed input.
BigInt parse_bigint(const std::string& text);
Rational parse_rational(const std::string& text);

/// Polynomial-convention binomial x(x-1)...(x-k+1)/k!, zero for k < 0.
BigInt binomial(long x, long k);

/// Zero unless 0 <= k <= x.
BigInt binomial_combinatorial(long x, long k);

BigInt factorial(long n);

} // namespace latticecount

#endif
