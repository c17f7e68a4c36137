#include "latticecount/latticecount.h"

#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "latticecount/document.hpp"
#include "latticecount/error.hpp"
#include "latticecount/focalc.hpp"
#include "latticecount/oracle.hpp"
#include "latticecount/recurrence.hpp"
#include "latticecount/verify.hpp"

using namespace latticecount;

struct lc_pattern {
    Pattern pattern;
    PatternProfile profile;
};

struct lc_table {
    std::string engine;
    BallotTable table;
};

struct lc_polys {
    Pattern pattern;
    std::string kind;
    std::vector<RationalPolynomial> polys;
};

struct lc_report {
    VerificationReport report;
};

namespace {

thread_local std::string last_error;
thread_local long last_position = -1;

lc_status status_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyPattern: return LC_ERR_EMPTY_PATTERN;
    case ErrorCode::BadChar: return LC_ERR_BAD_CHAR;
    case ErrorCode::DepthNonzero: return LC_ERR_DEPTH_NONZERO;
    case ErrorCode::PatternTooShort: return LC_ERR_PATTERN_TOO_SHORT;
    case ErrorCode::CapExceeded: return LC_ERR_CAP_EXCEEDED;
    case ErrorCode::TruncationTooLow: return LC_ERR_TRUNCATION_TOO_LOW;
    case ErrorCode::InvalidArgument:
    case ErrorCode::InsufficientPoints: return LC_ERR_INVALID_ARGUMENT;
    case ErrorCode::BadDocument: return LC_ERR_BAD_DOCUMENT;
    default: return LC_ERR_DEFECT;
    }
}

lc_status fail(lc_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
lc_status guard(Body&& body) {
    last_position = -1;
    try {
        body();
        return LC_OK;
    } catch (const BadCharError& e) {
        last_position = static_cast<long>(e.position());
        return fail(LC_ERR_BAD_CHAR, e.what());
    } catch (const Error& e) {
        return fail(status_for(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(LC_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(LC_ERR_DEFECT, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

document::Format to_format(lc_format format) {
    switch (format) {
    case LC_FORMAT_TEXT: return document::Format::Text;
    case LC_FORMAT_CSV: return document::Format::Csv;
    case LC_FORMAT_JSON: return document::Format::Json;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown format");
}

const char* engine_name(lc_engine engine) {
    switch (engine) {
    case LC_ENGINE_RECURRENCE: return "recurrence";
    case LC_ENGINE_AUTOMATON: return "automaton";
    case LC_ENGINE_FOCALC: return "engine";
    case LC_ENGINE_DFS: return "dfs";
    }
    throw Error(ErrorCode::InvalidArgument, "unknown engine");
}

BallotTable build_table(const lc_pattern& p, lc_engine engine, long max_n, long max_m) {
    if (max_n < 0 || max_m < 0)
        throw Error(ErrorCode::InvalidArgument, "max_n and max_m must be nonnegative");
    switch (engine) {
    case LC_ENGINE_RECURRENCE: return recurrence_table(p.pattern, max_n, max_m);
    case LC_ENGINE_AUTOMATON: return oracle::automaton_table(p.pattern, max_n, max_m);
    case LC_ENGINE_FOCALC: return focalc::engine_table(p.pattern, max_n, max_m);
    case LC_ENGINE_DFS: return oracle::dfs_table(p.pattern, max_n, max_m);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown engine");
}

} // namespace

extern "C" {

const char* lc_version(void) { return "1.0.0"; }

const char* lc_status_name(lc_status status) {
    switch (status) {
    case LC_OK: return "OK";
    case LC_ERR_EMPTY_PATTERN: return "EMPTY_PATTERN";
    case LC_ERR_BAD_CHAR: return "BAD_CHAR";
    case LC_ERR_DEPTH_NONZERO: return "DEPTH_NONZERO";
    case LC_ERR_PATTERN_TOO_SHORT: return "PATTERN_TOO_SHORT";
    case LC_ERR_CAP_EXCEEDED: return "CAP_EXCEEDED";
    case LC_ERR_TRUNCATION_TOO_LOW: return "TRUNCATION_TOO_LOW";
    case LC_ERR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case LC_ERR_BAD_DOCUMENT: return "BAD_DOCUMENT";
    case LC_ERR_DEFECT: return "DEFECT";
    case LC_ERR_NULL_POINTER: return "NULL_POINTER";
    case LC_ERR_OUT_OF_MEMORY: return "OUT_OF_MEMORY";
    }
    return "UNKNOWN";
}

const char* lc_last_error(void) { return last_error.c_str(); }

long lc_last_error_position(void) { return last_position; }

void lc_string_free(char* s) { delete[] s; }

lc_status lc_pattern_parse(const char* text, lc_pattern** out) {
    if (!text || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] {
        Pattern p = parse_pattern(text);
        PatternProfile pr = profile(p);
        *out = new lc_pattern{std::move(p), std::move(pr)};
    });
}

void lc_pattern_free(lc_pattern* pattern) { delete pattern; }

lc_status lc_pattern_string(const lc_pattern* pattern, char** out) {
    if (!pattern || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] { *out = copy_string(pattern->pattern.str()); });
}

lc_status lc_pattern_info_get(const lc_pattern* pattern, lc_pattern_info* out) {
    if (!pattern || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    const auto& pr = pattern->profile;
    *out = lc_pattern_info{pr.r_count, pr.u_count, pr.depth, pr.depth_zero ? 1 : 0, pr.bifixes.size()};
    return LC_OK;
}

lc_status lc_pattern_bifix(const lc_pattern* pattern, size_t index, char** bifix, long* trunc_r, long* trunc_u) {
    if (!pattern)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] {
        const auto& list = pattern->profile.bifixes;
        if (index >= list.size())
            throw Error(ErrorCode::InvalidArgument, "bifix index out of range");
        if (bifix)
            *bifix = copy_string(list[index].bifix.str());
        if (trunc_r)
            *trunc_r = list[index].trunc_r;
        if (trunc_u)
            *trunc_u = list[index].trunc_u;
    });
}

lc_status lc_analyze_render(const lc_pattern* pattern, lc_format format, char** out) {
    if (!pattern || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] { *out = copy_string(document::render_analysis(pattern->profile, to_format(format))); });
}

lc_status lc_table_create(const lc_pattern* pattern, lc_engine engine, long max_n, long max_m, lc_table** out) {
    if (!pattern || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] { *out = new lc_table{engine_name(engine), build_table(*pattern, engine, max_n, max_m)}; });
}

void lc_table_free(lc_table* table) { delete table; }

lc_status lc_table_bounds(const lc_table* table, long* max_n, long* max_m) {
    if (!table)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    if (max_n)
        *max_n = table->table.max_n();
    if (max_m)
        *max_m = table->table.max_m();
    return LC_OK;
}

lc_status lc_table_cell(const lc_table* table, long n, long m, char** out) {
    if (!table || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] {
        if (!BallotTable::valid(n, m))
            throw Error(ErrorCode::InvalidArgument, "cell lies below the boundary m = n - 1");
        *out = copy_string(to_string(table->table.at(n, m)));
    });
}

lc_status lc_table_render(const lc_table* table, lc_format format, char** out) {
    if (!table || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] { *out = copy_string(document::render_table(table->table, table->engine, to_format(format))); });
}

lc_status lc_table_parse_json(const char* json, lc_table** out) {
    if (!json || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] {
        auto doc = document::parse_table_json(json);
        *out = new lc_table{std::move(doc.engine), std::move(doc.table)};
    });
}

int lc_table_equal(const lc_table* lhs, const lc_table* rhs) {
    if (!lhs || !rhs)
        return 0;
    return lhs->table == rhs->table ? 1 : 0;
}

lc_status lc_dyck_render(const lc_pattern* pattern, lc_engine engine, long n, lc_format format, char** out) {
    if (!pattern || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] {
        const BallotTable table = build_table(*pattern, engine, n, n);
        std::vector<BigInt> values;
        for (long k = 0; k <= n; ++k)
            values.push_back(table.at(k, k));
        *out = copy_string(document::render_dyck(pattern->pattern, engine_name(engine), values, to_format(format)));
    });
}

lc_status lc_polys_create(const lc_pattern* pattern, lc_poly_kind kind, long n, lc_polys** out) {
    if (!pattern || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] {
        if (n < 0)
            throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
        if (kind != LC_POLY_BASIC && kind != LC_POLY_SHEFFER)
            throw Error(ErrorCode::InvalidArgument, "unknown polynomial kind");
        auto pair = focalc::sheffer_from_pattern(pattern->profile, std::max(n, 1L));
        auto& list = kind == LC_POLY_BASIC ? pair.basic : pair.sheffer;
        list.resize(static_cast<std::size_t>(n + 1));
        *out = new lc_polys{pattern->pattern, kind == LC_POLY_BASIC ? "basic" : "sheffer", std::move(list)};
    });
}

void lc_polys_free(lc_polys* polys) { delete polys; }

size_t lc_polys_count(const lc_polys* polys) { return polys ? polys->polys.size() : 0; }

lc_status lc_polys_eval(const lc_polys* polys, size_t index, const char* x, char** out) {
    if (!polys || !x || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] {
        if (index >= polys->polys.size())
            throw Error(ErrorCode::InvalidArgument, "polynomial index out of range");
        Rational at;
        try {
            at = parse_rational(x);
        } catch (const Error&) {
            throw Error(ErrorCode::InvalidArgument, std::string("not a rational: '") + x + "'");
        }
        *out = copy_string(to_string(Rational(polys->polys[index](at))));
    });
}

lc_status lc_polys_render(const lc_polys* polys, lc_format format, char** out) {
    if (!polys || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] {
        *out = copy_string(document::render_polynomials(polys->pattern, polys->kind, polys->polys, to_format(format)));
    });
}

lc_status lc_polys_parse_json(const char* json, lc_polys** out) {
    if (!json || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] {
        auto doc = document::parse_polynomials_json(json);
        *out = new lc_polys{std::move(doc.pattern), std::move(doc.kind), std::move(doc.polys)};
    });
}

lc_status lc_verify(const lc_pattern* pattern, long max_n, long max_m, lc_report** out) {
    if (!pattern || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] {
        VerifyOptions options;
        options.max_n = max_n;
        options.max_m = max_m;
        options.dfs_cap = oracle::default_dfs_cap();
        *out = new lc_report{verify_pattern(pattern->pattern, options)};
    });
}

void lc_report_free(lc_report* report) { delete report; }

int lc_report_passed(const lc_report* report) { return report && report->report.passed() ? 1 : 0; }

size_t lc_report_check_count(const lc_report* report) { return report ? report->report.checks.size() : 0; }

lc_status lc_report_render(const lc_report* report, lc_format format, char** out) {
    if (!report || !out)
        return fail(LC_ERR_NULL_POINTER, "null pointer argument");
    return guard([&] { *out = copy_string(document::render_report(report->report, to_format(format))); });
}

} // extern "C"
