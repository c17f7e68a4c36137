#ifndef LATTICECOUNT_FORMULAS_HPP
#define LATTICECOUNT_FORMULAS_HPP

#include "latticecount/numeric.hpp"

// Closed-form counts for pattern families, evaluated directly from their
// summation formulas. Nothing here touches the series engine or the
// recurrence; each function sums over the full index range and relies on
// vanishing binomials instead of printed summation limits.
//
// Dimensions: the pattern is a x c (r's by u's); a single bifix leaves a
// truncated piece of b r's and d u's. All functions require x >= n - 1 and
// return s_0 = 1. A zero denominator must come with a zero numerator factor,
// otherwise FormulaDefect is thrown.
namespace latticecount::formulas {

/// [t^n] (1 + t + ... + t^{arity-1})^x, for any integer x.
Rational gen_binom(long x, long n, long arity);

/// Bifix-free depth-zero pattern with a >= 2, a >= c >= 1.
BigInt s_bifix_free(long n, long x, long a, long c);
BigInt dyck_bifix_free(long n, long a, long c);

/// Exactly one bifix; multinomials carry the remainder as a fourth part.
BigInt s_one_bifix(long n, long x, long a, long c, long b, long d);

/// Patterns r p' r whose only bifix is r (a = b + 1, c = d), b >= d >= 1.
BigInt s_rpr(long n, long x, long b, long d);
BigInt dyck_rpr(long n, long b, long d);

/// Dyck paths avoiding rur as an alternating Catalan sum.
BigInt dyck_rur_catalan(long n);

/// Pattern r(ur)^k, k >= 1.
BigInt s_r_ur_k(long n, long x, long k);
BigInt dyck_r_ur_k(long n, long k);

/// Pattern r^a, a >= 2: ballot Abelization of the generalized binomial.
BigInt s_r_power(long n, long x, long a);

} // namespace latticecount::formulas

#endif
