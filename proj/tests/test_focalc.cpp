#include <doctest.h>

#include "latticecount/error.hpp"
#include "latticecount/focalc.hpp"
#include "latticecount/formulas.hpp"
#include "latticecount/oracle.hpp"
#include "latticecount/recurrence.hpp"
#include "reference_tables.hpp"

using namespace latticecount;
using namespace latticecount::focalc;

namespace {

Pattern P(const char* s) { return parse_pattern(s); }

OperatorEquation eq_of(const char* s) { return operator_equation(profile(P(s))); }

} // namespace

TEST_CASE("operator_equation reads dimensions from the profile") {
    CHECK(eq_of("rur") == OperatorEquation{2, 1, {{1, 1}}});
    CHECK(eq_of("uurrr") == OperatorEquation{3, 2, {}});
    CHECK(eq_of("urruurr") == OperatorEquation{4, 3, {{2, 2}}});
}

TEST_CASE("rur tau also solves the short recurrence") {
    // nabla = B - B E^{-1} + B E^{-2}, i.e. 1 - w = t - t w + t w^2.
    const long order = 16;
    const TruncSeries tau = solve_operator_equation(eq_of("rur"), order);
    const TruncSeries w = series_inverse(TruncSeries::one(order) + tau);
    const TruncSeries t = TruncSeries::monomial(order, 1);
    const TruncSeries lhs = TruncSeries::one(order) - w;
    const TruncSeries rhs = t - t * w + t * w * w;
    CHECK(lhs == rhs);
    CHECK(operator_residual(eq_of("rur"), tau).is_zero());
}

TEST_CASE("r^a has a geometric tau") {
    for (long a = 2; a <= 6; ++a) {
        const std::string text(static_cast<std::size_t>(a), 'r');
        const TruncSeries tau = solve_operator_equation(eq_of(text.c_str()), 12);
        TruncSeries expected(12);
        for (long k = 1; k < a; ++k)
            expected[k] = 1;
        CHECK(tau == expected);
    }
}

TEST_CASE("bifix-free residual vanishes") {
    const auto eq = eq_of("uurrr");
    CHECK(operator_residual(eq, solve_operator_equation(eq, 14)).is_zero());
}

TEST_CASE("basic_sequence of tau = t is the binomial sequence") {
    const PolynomialList b = basic_sequence(TruncSeries::monomial(6, 1));
    REQUIRE(b.size() == 7);
    for (long n = 0; n <= 6; ++n)
        for (long x = -4; x <= 9; ++x)
            CHECK(b[static_cast<std::size_t>(n)](x) == binomial(x, n));
    CHECK_THROWS_AS(basic_sequence(TruncSeries(4, {0, 0, 1})), Error);
}

TEST_CASE("r^a basic sequence matches the generalized binomial") {
    for (long a = 2; a <= 5; ++a) {
        const std::string text(static_cast<std::size_t>(a), 'r');
        const PolynomialList b = basic_sequence(solve_operator_equation(eq_of(text.c_str()), 8));
        for (long n = 0; n <= 8; ++n)
            for (long x = -3; x <= 10; ++x)
                CHECK(b[static_cast<std::size_t>(n)](x) == formulas::gen_binom(x, n, a));
    }
}

TEST_CASE("abelize") {
    const PolynomialList binom = basic_sequence(TruncSeries::monomial(5, 1));
    CHECK(abelize(binom, 0, 0) == binom);
    // No restriction: nabla = B, so E = 1 + t/(1 - t) and b_n(x) = C(x + n - 1, n).
    TruncSeries geometric(5);
    for (long k = 1; k <= 5; ++k)
        geometric[k] = 1;
    const PolynomialList ballot = abelize(basic_sequence(geometric), 1, -1);
    for (long n = 0; n <= 5; ++n)
        for (long m = n; m <= 10; ++m)
            CHECK(ballot[static_cast<std::size_t>(n)](m) == Rational(oracle::ballot_count(n, m)));
    const PolynomialList bad{RationalPolynomial{1}, RationalPolynomial{1, 1}};
    try {
        abelize(bad, 1, -1);
        FAIL("expected NotBasic");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotBasic);
    }
}

TEST_CASE("Sheffer values for rur reproduce the top row of the reference table") {
    const SequencePair seq = sheffer_from_pattern(profile(P("rur")), 9);
    for (long n = 0; n <= 9; ++n)
        CHECK(seq.sheffer[static_cast<std::size_t>(n)](8) == reference::at(reference::kRurTable, n, 8));
    CHECK(seq.sheffer[2] == RationalPolynomial{0, Rational(-1, 2), Rational(1, 2)});
    CHECK(seq.sheffer[3] == RationalPolynomial{-2, Rational(4, 3), Rational(-1, 2), Rational(1, 6)});
}

TEST_CASE("Sheffer values for urruurr reproduce the diagonal") {
    const SequencePair seq = sheffer_from_pattern(profile(P("urruurr")), 8);
    for (long n = 0; n <= 8; ++n)
        CHECK(seq.sheffer[static_cast<std::size_t>(n)](n) == reference::at(reference::kUrruurrTable, n, n));
}

TEST_CASE("engine_table matches the automaton for two bifixes") {
    const BallotTable engine = engine_table(P("rururrur"), 9, 12);
    CHECK_FALSE(first_difference(engine, oracle::automaton_table(P("rururrur"), 9, 12)));
}

TEST_CASE("transfer formula agrees with the generating-function route") {
    for (const char* text : {"rur", "uurrr", "urruurr", "rururrur", "rrr", "rurur"}) {
        const auto pr = profile(P(text));
        const auto eq = operator_equation(pr);
        const TruncSeries tau = solve_operator_equation(eq, 10);
        const PolynomialList gf = basic_sequence(tau);
        for (long n = 0; n <= 10; ++n) {
            const RationalPolynomial tf = transfer_formula_basic(eq, n, 10);
            CHECK_MESSAGE(tf == gf[static_cast<std::size_t>(n)], text << " n = " << n);
            CHECK(gf[static_cast<std::size_t>(n)].leading() == Rational(1) / Rational(factorial(n)));
        }
        const SequencePair seq = sheffer_from_pattern(pr, 10);
        CHECK_FALSE(operator_identity_failure(seq.basic, build_recurrence(pr, 10)));
        CHECK_FALSE(generating_function_failure(seq.sheffer, tau));
    }
}

TEST_CASE("identity checks detect a corrupted sequence") {
    const auto pr = profile(P("rur"));
    SequencePair seq = sheffer_from_pattern(pr, 6);
    const TruncSeries tau = solve_operator_equation(operator_equation(pr), 6);
    seq.basic[4] += RationalPolynomial{0, 1};
    seq.sheffer[3] += RationalPolynomial{1};
    const auto op = operator_identity_failure(seq.basic, build_recurrence(pr, 6));
    REQUIRE(op);
    CHECK(*op >= 4);
    const auto gf = generating_function_failure(seq.sheffer, tau);
    REQUIRE(gf);
    CHECK(*gf == 3);
}
