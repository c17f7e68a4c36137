#include "latticecount/numeric.hpp"

#include "latticecount/error.hpp"

namespace latticecount {

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::string to_string(const Rational& v) { return v.get_str(10); }

BigInt parse_bigint(const std::string& text) {
    BigInt out;
    if (text.empty() || out.set_str(text, 10) != 0)
        throw Error(ErrorCode::BadDocument, "not an integer: '" + text + "'");
    return out;
}

Rational parse_rational(const std::string& text) {
    Rational out;
    if (text.empty() || out.set_str(text, 10) != 0 || out.get_den() == 0)
        throw Error(ErrorCode::BadDocument, "not a rational: '" + text + "'");
    out.canonicalize();
    return out;
}

BigInt binomial(long x, long k) {
    if (k < 0)
        return 0;
    BigInt out;
    BigInt top = x;
    // mpz_bin_ui handles negative upper arguments with the polynomial convention.
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

BigInt binomial_combinatorial(long x, long k) {
    if (x < 0 || k < 0 || k > x)
        return 0;
    return binomial(x, k);
}

BigInt factorial(long n) {
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "factorial of negative number");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

} // namespace latticecount
