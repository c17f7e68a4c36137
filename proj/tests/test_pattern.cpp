#include <doctest.h>

#include <set>

#include "latticecount/error.hpp"
#include "latticecount/pattern.hpp"

using namespace latticecount;

namespace {

Pattern P(const char* s) { return parse_pattern(s); }

ErrorCode code_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("parse_pattern") {
    CHECK(P("rur").steps() == std::vector<Step>{Step::Right, Step::Up, Step::Right});
    CHECK(P("URRUURR").str() == "urruurr");
    CHECK(code_of([] { parse_pattern(""); }) == ErrorCode::EmptyPattern);
    try {
        parse_pattern("rxr");
        FAIL("rxr parsed");
    } catch (const BadCharError& e) {
        CHECK(e.code() == ErrorCode::BadChar);
        CHECK(e.position() == 1);
    }
    CHECK_THROWS_AS(parse_pattern("ru "), BadCharError);
}

TEST_CASE("reverse_pattern") {
    CHECK(reverse_pattern(P("uururrr")).str() == "uuururr");
    CHECK(reverse_pattern(P("r")).str() == "u");
    CHECK(reverse_pattern(P("ur")).str() == "ur");
    CHECK(code_of([] { reverse_pattern(Pattern()); }) == ErrorCode::EmptyPattern);
}

TEST_CASE("profile of the worked patterns") {
    SUBCASE("rur") {
        const auto pr = profile(P("rur"));
        CHECK(pr.r_count == 2);
        CHECK(pr.u_count == 1);
        CHECK(pr.depth == 1);
        CHECK(pr.depth_zero);
        REQUIRE(pr.bifixes.size() == 1);
        CHECK(pr.bifixes[0].bifix.str() == "r");
        CHECK(pr.bifixes[0].trunc_r == 1);
        CHECK(pr.bifixes[0].trunc_u == 1);
    }
    SUBCASE("urruurr") {
        const auto pr = profile(P("urruurr"));
        CHECK(pr.r_count == 4);
        CHECK(pr.u_count == 3);
        CHECK(pr.depth_zero);
        REQUIRE(pr.bifixes.size() == 1);
        CHECK(pr.bifixes[0].bifix.str() == "urr");
        CHECK(pr.bifixes[0].trunc_r == 2);
        CHECK(pr.bifixes[0].trunc_u == 2);
    }
    SUBCASE("rururrur") {
        const auto pr = profile(P("rururrur"));
        CHECK(pr.r_count == 5);
        CHECK(pr.u_count == 3);
        REQUIRE(pr.bifixes.size() == 2);
        CHECK(pr.bifixes[0] == BifixInfo{P("r"), 4, 3});
        CHECK(pr.bifixes[1] == BifixInfo{P("rur"), 3, 2});
    }
    SUBCASE("uurrurrur") {
        const auto pr = profile(P("uurrurrur"));
        CHECK(pr.r_count == 5);
        CHECK(pr.u_count == 4);
        CHECK(pr.depth_zero);
    }
    CHECK_FALSE(profile(P("rru")).depth_zero);
    CHECK(profile(P("uurrr")).bifixes.empty());
    CHECK(code_of([] { profile(Pattern()); }) == ErrorCode::EmptyPattern);
}

TEST_CASE("the whole pattern is never its own bifix") {
    CHECK(profile(P("r")).bifixes.empty());
    CHECK(profile(P("rr")).bifixes.size() == 1);
}

TEST_CASE("family bifix counts") {
    for (std::size_t a = 1; a <= 9; ++a) {
        const Pattern p(std::vector<Step>(a, Step::Right));
        const auto pr = profile(p);
        REQUIRE(pr.bifixes.size() == a - 1);
        for (std::size_t i = 0; i < a - 1; ++i)
            CHECK(pr.bifixes[i].bifix.size() == i + 1);
    }
    for (int k = 1; k <= 5; ++k) {
        std::string text = "r";
        for (int i = 0; i < k; ++i)
            text += "ur";
        const auto pr = profile(parse_pattern(text));
        REQUIRE(pr.bifixes.size() == static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            CHECK(pr.bifixes[static_cast<std::size_t>(i)].bifix.size() == static_cast<std::size_t>(2 * i + 1));
    }
}

TEST_CASE("exhaustive: borders, depth-zero forms, bifix dimensions, involution") {
    std::size_t depth_zero_count = 0;
    for (std::size_t len = 1; len <= 12; ++len) {
        for (const Pattern& p : all_patterns(len)) {
            const auto borders = border_lengths(p);
            REQUIRE(borders == border_lengths_naive(p));

            const bool dz = is_depth_zero(p);
            REQUIRE(dz == is_ballot(reverse_pattern(p)));
            REQUIRE(reverse_pattern(reverse_pattern(p)) == p);

            const auto pr = profile(p);
            REQUIRE(pr == profile(reverse_pattern(reverse_pattern(p))));
            REQUIRE(pr.bifixes.size() == borders.size());
            for (const auto& b : pr.bifixes) {
                REQUIRE(b.trunc_r + b.trunc_u + static_cast<long>(b.bifix.size()) == static_cast<long>(len));
                if (dz) {
                    REQUIRE(b.trunc_r >= b.trunc_u);
                }
            }
            depth_zero_count += dz ? 1 : 0;
        }
    }
    CHECK(depth_zero_count > 0);
}
