#include "latticecount/formulas.hpp"

#include <string>
#include <vector>

#include "latticecount/error.hpp"
#include "latticecount/oracle.hpp"
#include "latticecount/polynomial.hpp"

namespace latticecount::formulas {

namespace {

void require(bool ok, const char* what) {
    if (!ok)
        throw Error(ErrorCode::BadDims, what);
}

BigInt as_integer(const Rational& v, const char* formula) {
    if (v.get_den() != 1)
        throw Error(ErrorCode::FormulaDefect,
                    std::string(formula) + " produced the non-integer " + to_string(v));
    return v.get_num();
}

int sign(long e) { return e % 2 == 0 ? 1 : -1; }

// Adds numerator / denominator to sum; a zero denominator is accepted only
// when guard_factor (the product of the other vanishing factors) is zero.
void add_guarded(Rational& sum, const BigInt& numerator, long denominator, const BigInt& guard_factor,
                 const char* formula) {
    if (denominator == 0) {
        if (guard_factor != 0)
            throw Error(ErrorCode::FormulaDefect,
                        std::string(formula) + ": zero denominator with nonzero numerator");
        return;
    }
    sum += Rational(numerator) / Rational(denominator);
}

BigInt multinomial4(long total, long j, long k, long l) {
    const long rest = total - j - k - l;
    if (total < 0 || j < 0 || k < 0 || l < 0 || rest < 0)
        return 0;
    return factorial(total) / (factorial(j) * factorial(k) * factorial(l) * factorial(rest));
}

} // namespace

Rational gen_binom(long x, long n, long arity) {
    require(arity >= 1, "gen_binom needs arity >= 1");
    if (n < 0)
        return 0;
    const auto len = static_cast<std::size_t>(n + 1);
    auto multiply = [&](const std::vector<BigInt>& lhs) {
        // lhs * (1 + t + ... + t^{arity-1}) as a running window sum
        std::vector<BigInt> out(len);
        BigInt window = 0;
        for (std::size_t i = 0; i < len; ++i) {
            window += lhs[i];
            if (i >= static_cast<std::size_t>(arity))
                window -= lhs[i - static_cast<std::size_t>(arity)];
            out[i] = window;
        }
        return out;
    };
    std::vector<BigInt> power(len, 0);
    power[0] = 1;
    for (long i = 0; i < (x < 0 ? -x : x); ++i)
        power = multiply(power);
    if (x >= 0)
        return Rational(power.back());
    // Invert a series with unit constant term over the integers.
    std::vector<BigInt> inverse(len, 0);
    inverse[0] = 1;
    for (std::size_t i = 1; i < len; ++i) {
        BigInt acc = 0;
        for (std::size_t k = 1; k <= i; ++k)
            acc += power[k] * inverse[i - k];
        inverse[i] = -acc;
    }
    return Rational(inverse.back());
}

BigInt s_bifix_free(long n, long x, long a, long c) {
    require(a >= 2 && c >= 1 && a >= c, "s_bifix_free needs a >= 2 and a >= c >= 1");
    require(n >= 0 && x >= n - 1, "s_bifix_free needs x >= n - 1");
    if (n == 0)
        return 1;
    const BigInt lead = x - n + 1;
    Rational sum = 0;
    for (long i = 0; i <= n; ++i) {
        const long j = n - (a - 1) * i;
        const BigInt comb = binomial_combinatorial(j, i);
        const BigInt numerator = sign(i) * comb * binomial(x + n - (a + c - 1) * i, j);
        add_guarded(sum, numerator, x - c * i + 1, lead * comb, "s_bifix_free");
    }
    return as_integer(sum * Rational(lead), "s_bifix_free");
}

BigInt dyck_bifix_free(long n, long a, long c) {
    require(a >= 2 && c >= 1 && a >= c, "dyck_bifix_free needs a >= 2 and a >= c >= 1");
    require(n >= 0, "dyck_bifix_free needs n >= 0");
    Rational sum = 0;
    for (long i = 0; i <= n; ++i) {
        const long j = n - (a - 1) * i;
        const BigInt comb = binomial_combinatorial(j, i);
        const BigInt numerator = sign(i) * comb * binomial(2 * n - (a + c - 1) * i, j);
        add_guarded(sum, numerator, n - c * i + 1, comb, "dyck_bifix_free");
    }
    return as_integer(sum, "dyck_bifix_free");
}

BigInt s_one_bifix(long n, long x, long a, long c, long b, long d) {
    require(a >= 2 && a >= c && c >= 0, "s_one_bifix needs a >= 2 and a >= c >= 0");
    require(b >= 1 && b >= d && d >= 0 && b + d < a + c, "s_one_bifix needs b >= d >= 0, b >= 1");
    require(n >= 0 && x >= n - 1, "s_one_bifix needs x >= n - 1");
    if (n == 0)
        return 1;
    const BigInt lead = x - n + 1;
    Rational sum = 0;
    for (long j = 0; j <= n; ++j) {
        for (long k = 0; k <= n; ++k) {
            for (long l = 0; l <= n; ++l) {
                const long top = n - (a - 1) * j - b * k - (b - 1) * l;
                const BigInt mult = multinomial4(top, j, k, l);
                if (mult == 0)
                    continue;
                const long lower = n - (a - 1) * j - b * (k + l) - 1;
                const long upper = n - (a + c - 1) * j - (b + d) * (k + l) + x;
                const BigInt numerator = sign(j + l) * mult * lead * binomial(upper, lower);
                add_guarded(sum, numerator, top, mult * lead, "s_one_bifix");
            }
        }
    }
    return as_integer(sum, "s_one_bifix");
}

BigInt s_rpr(long n, long x, long b, long d) {
    require(b >= d && d >= 1, "s_rpr needs b >= d >= 1");
    require(n >= 0 && x >= n - 1, "s_rpr needs x >= n - 1");
    if (n == 0)
        return 1;
    const BigInt lead = x - n + 1;
    Rational sum = 0;
    for (long i = 0; i <= n; ++i) {
        const BigInt comb = binomial_combinatorial(n - (b - 1) * i - 1, i);
        const BigInt numerator = sign(i) * comb * binomial(x + n - (d + b) * i, n - b * i);
        add_guarded(sum, numerator, x - d * i + 1, lead * comb, "s_rpr");
    }
    return as_integer(sum * Rational(lead), "s_rpr");
}

BigInt dyck_rpr(long n, long b, long d) {
    require(b >= d && d >= 1, "dyck_rpr needs b >= d >= 1");
    require(n >= 0, "dyck_rpr needs n >= 0");
    if (n == 0)
        return 1;
    Rational sum = 0;
    for (long i = 0; i <= n; ++i) {
        const BigInt comb = binomial_combinatorial(n - (b - 1) * i - 1, i);
        const BigInt numerator = sign(i) * comb * binomial(2 * n - (d + b) * i, n - b * i);
        add_guarded(sum, numerator, n - d * i + 1, comb, "dyck_rpr");
    }
    return as_integer(sum, "dyck_rpr");
}

BigInt dyck_rur_catalan(long n) {
    require(n >= 0, "dyck_rur_catalan needs n >= 0");
    BigInt sum = 0;
    for (long i = 0; i <= n; ++i)
        sum += sign(i) * oracle::catalan(n - i) * binomial(n - 1, i);
    return sum;
}

BigInt s_r_ur_k(long n, long x, long k) {
    require(k >= 1, "s_r_ur_k needs k >= 1");
    require(n >= 0 && x >= n - 1, "s_r_ur_k needs x >= n - 1");
    if (n == 0)
        return 1;
    const BigInt lead = x - n + 1;
    Rational sum = 0;
    for (long i = 0; i <= n; ++i) {
        Rational inner = 0;
        for (long j = 0; j <= i; ++j)
            inner += sign(j) * Rational(binomial_combinatorial(i, j)) * gen_binom(-j, n - i - k * j, k + 1);
        const Rational numerator = inner * Rational(binomial(x - n + 2 * i, i));
        if (numerator.get_den() != 1)
            throw Error(ErrorCode::FormulaDefect, "s_r_ur_k: non-integer generalized binomial");
        add_guarded(sum, numerator.get_num(), x - n + i + 1, lead, "s_r_ur_k");
    }
    return as_integer(sum * Rational(lead), "s_r_ur_k");
}

BigInt dyck_r_ur_k(long n, long k) {
    require(k >= 1, "dyck_r_ur_k needs k >= 1");
    require(n >= 0, "dyck_r_ur_k needs n >= 0");
    Rational sum = 0;
    for (long i = 0; i <= n; ++i) {
        Rational inner = 0;
        for (long j = 0; j <= i; ++j)
            inner += sign(j) * Rational(binomial_combinatorial(i, j)) * gen_binom(-j, n - i - k * j, k + 1);
        sum += Rational(oracle::catalan(i)) * inner;
    }
    return as_integer(sum, "dyck_r_ur_k");
}

BigInt s_r_power(long n, long x, long a) {
    require(a >= 2, "s_r_power needs a >= 2");
    require(n >= 0 && x >= n - 1, "s_r_power needs x >= n - 1");
    if (n == 0)
        return 1;
    // b_n(y) = [t^n](1 + ... + t^{a-1})^y has degree n; recover it from n + 1 values.
    std::vector<std::pair<Rational, Rational>> points;
    for (long y = 0; y <= n; ++y)
        points.emplace_back(Rational(y), gen_binom(y, n, a));
    const RationalPolynomial reduced = interpolate(points).divided_by_x();
    return as_integer(Rational(x - n + 1) * reduced(Rational(x + 1)), "s_r_power");
}

} // namespace latticecount::formulas
