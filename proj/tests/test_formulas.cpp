#include <doctest.h>

#include "latticecount/error.hpp"
#include "latticecount/formulas.hpp"
#include "latticecount/oracle.hpp"

using namespace latticecount;
using namespace latticecount::formulas;

namespace {

Pattern P(const std::string& s) { return parse_pattern(s); }

ErrorCode code_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::InvalidArgument;
}

template <typename F>
void check_against_oracle(const std::string& pattern, long max_n, long max_m, F&& formula) {
    const BallotTable t = oracle::automaton_table(P(pattern), max_n, max_m);
    for (long n = 0; n <= max_n; ++n)
        for (long m = std::max(0L, n - 1); m <= max_m; ++m)
            CHECK_MESSAGE(formula(n, m) == t.at(n, m), pattern << " at (" << n << ", " << m << ")");
}

} // namespace

TEST_CASE("gen_binom") {
    CHECK(gen_binom(4, 2, 2) == 6);
    CHECK(gen_binom(-1, 0, 2) == 1);
    CHECK(gen_binom(-1, 1, 3) == -1);
    CHECK(gen_binom(2, 2, 3) == 3); // (1 + t + t^2)^2
    CHECK(gen_binom(3, 7, 3) == 0);
    for (long x = -20; x <= 20; ++x)
        for (long n = 0; n <= 20; ++n)
            CHECK(gen_binom(x, n, 2) == Rational(binomial(x, n)));
}

TEST_CASE("one-bifix values from the urruurr table") {
    CHECK(s_one_bifix(2, 8, 4, 3, 2, 2) == 35);
    CHECK(s_one_bifix(7, 7, 4, 3, 2, 2) == 377);
    CHECK(s_one_bifix(0, 5, 4, 3, 2, 2) == 1);
}

TEST_CASE("rur catalan sum") {
    const std::vector<long> expected{1, 1, 1, 2, 4, 9, 21, 51, 127};
    for (long n = 0; n <= 8; ++n)
        CHECK(dyck_rur_catalan(n) == expected[static_cast<std::size_t>(n)]);
    for (long n = 0; n <= 14; ++n)
        CHECK(dyck_rur_catalan(n) == oracle::dyck_count(P("rur"), n));
}

TEST_CASE("bifix-free formula against the oracle") {
    check_against_oracle("uurrr", 9, 11, [](long n, long m) { return s_bifix_free(n, m, 3, 2); });
    check_against_oracle("urrr", 9, 11, [](long n, long m) { return s_bifix_free(n, m, 3, 1); });
    check_against_oracle("uurrurr", 9, 11, [](long n, long m) { return s_bifix_free(n, m, 4, 3); });
    for (long n = 0; n <= 10; ++n)
        CHECK(dyck_bifix_free(n, 3, 2) == oracle::dyck_count(P("uurrr"), n));
}

TEST_CASE("one-bifix formula against the oracle") {
    check_against_oracle("rur", 9, 11, [](long n, long m) { return s_one_bifix(n, m, 2, 1, 1, 1); });
    check_against_oracle("urruurr", 9, 11, [](long n, long m) { return s_one_bifix(n, m, 4, 3, 2, 2); });
    check_against_oracle("rurr", 9, 11, [](long n, long m) { return s_one_bifix(n, m, 3, 1, 2, 1); });
}

TEST_CASE("r p' r formula against the oracle") {
    check_against_oracle("rur", 9, 11, [](long n, long m) { return s_rpr(n, m, 1, 1); });
    check_against_oracle("ruurr", 9, 11, [](long n, long m) { return s_rpr(n, m, 2, 2); });
    check_against_oracle("rurrr", 9, 11, [](long n, long m) { return s_rpr(n, m, 3, 1); });
    for (long n = 0; n <= 10; ++n)
        CHECK(dyck_rpr(n, 2, 2) == oracle::dyck_count(P("ruurr"), n));
}

TEST_CASE("r(ur)^k formula against the oracle") {
    for (long k = 1; k <= 3; ++k) {
        std::string text = "r";
        for (long i = 0; i < k; ++i)
            text += "ur";
        check_against_oracle(text, 9, 11, [k](long n, long m) { return s_r_ur_k(n, m, k); });
        for (long n = 0; n <= 10; ++n)
            CHECK(dyck_r_ur_k(n, k) == oracle::dyck_count(P(text), n));
    }
}

TEST_CASE("r^a formula against the oracle") {
    for (long a = 2; a <= 5; ++a)
        check_against_oracle(std::string(static_cast<std::size_t>(a), 'r'), 9, 11,
                             [a](long n, long m) { return s_r_power(n, m, a); });
}

TEST_CASE("invalid dimensions") {
    CHECK(code_of([] { s_bifix_free(2, 3, 1, 1); }) == ErrorCode::BadDims);
    CHECK(code_of([] { s_bifix_free(2, 3, 2, 3); }) == ErrorCode::BadDims);
    CHECK(code_of([] { s_r_power(2, 3, 1); }) == ErrorCode::BadDims);
    CHECK(code_of([] { s_r_ur_k(2, 3, 0); }) == ErrorCode::BadDims);
    CHECK(code_of([] { s_rpr(2, 3, 1, 2); }) == ErrorCode::BadDims);
    CHECK(code_of([] { s_bifix_free(5, 2, 3, 2); }) == ErrorCode::BadDims);
}
