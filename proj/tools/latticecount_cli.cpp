// latticecount: count ballot paths avoiding a pattern.
//
//   latticecount <analyze|table|dyck|polys|verify> <pattern> [flags]
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 pattern-class error, 4 resource cap.

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "latticecount/latticecount.h"

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kParseError = 2, kPatternClass = 3, kCap = 4 };

int exit_code_for(lc_status status) {
    switch (status) {
    case LC_OK: return kOk;
    case LC_ERR_EMPTY_PATTERN:
    case LC_ERR_BAD_CHAR:
    case LC_ERR_INVALID_ARGUMENT:
    case LC_ERR_BAD_DOCUMENT: return kParseError;
    case LC_ERR_DEPTH_NONZERO:
    case LC_ERR_PATTERN_TOO_SHORT: return kPatternClass;
    case LC_ERR_CAP_EXCEEDED: return kCap;
    default: return kVerifyFailed;
    }
}

int report_failure(lc_status status) {
    std::cerr << "latticecount: " << lc_status_name(status) << ": " << lc_last_error() << '\n';
    return exit_code_for(status);
}

struct StringDeleter {
    void operator()(char* s) const { lc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PatternDeleter {
    void operator()(lc_pattern* p) const { lc_pattern_free(p); }
};
struct TableDeleter {
    void operator()(lc_table* t) const { lc_table_free(t); }
};
struct PolysDeleter {
    void operator()(lc_polys* p) const { lc_polys_free(p); }
};
struct ReportDeleter {
    void operator()(lc_report* r) const { lc_report_free(r); }
};

const std::map<std::string, lc_format> kFormats = {
    {"text", LC_FORMAT_TEXT}, {"csv", LC_FORMAT_CSV}, {"json", LC_FORMAT_JSON}};
const std::map<std::string, lc_engine> kEngines = {{"recurrence", LC_ENGINE_RECURRENCE},
                                                   {"automaton", LC_ENGINE_AUTOMATON},
                                                   {"engine", LC_ENGINE_FOCALC},
                                                   {"dfs", LC_ENGINE_DFS}};
const std::map<std::string, lc_poly_kind> kKinds = {{"basic", LC_POLY_BASIC}, {"sheffer", LC_POLY_SHEFFER}};

// Runs a rendering call and prints the string it produces.
template <class Render>
int emit(Render&& render) {
    char* raw = nullptr;
    const lc_status status = render(&raw);
    OwnedString owned(raw);
    if (status != LC_OK)
        return report_failure(status);
    std::fputs(owned.get(), stdout);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Count ballot paths avoiding a depth-zero pattern"};
    app.require_subcommand(1);

    std::string pattern_text;
    std::string format_name = "text";
    std::string engine_name = "recurrence";
    std::string kind_name = "sheffer";
    long max_n = 8;
    long max_m = 8;
    long n = 8;
    bool require_depth_zero = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("pattern", pattern_text, "Pattern over {u, r}")->required();
        cmd->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
    };

    auto* analyze = app.add_subcommand("analyze", "Dimensions, depth, bifixes and recurrence conditions");
    add_common(analyze);
    analyze->add_flag("--require-depth-zero", require_depth_zero, "Exit 3 unless the pattern is depth-zero");

    auto* table = app.add_subcommand("table", "Table of s_n(m)");
    add_common(table);
    table->add_option("--max-n", max_n, "Largest n")->capture_default_str();
    table->add_option("--max-m", max_m, "Largest m")->capture_default_str();
    table->add_option("--engine", engine_name, "Counting engine")
        ->check(CLI::IsMember({"recurrence", "automaton", "engine", "dfs"}))
        ->capture_default_str();

    auto* dyck = app.add_subcommand("dyck", "Dyck counts s_0(0) .. s_n(n)");
    add_common(dyck);
    dyck->add_option("--n", n, "Largest n")->capture_default_str();
    dyck->add_option("--engine", engine_name, "Counting engine")
        ->check(CLI::IsMember({"recurrence", "automaton", "engine", "dfs"}))
        ->capture_default_str();

    auto* polys = app.add_subcommand("polys", "Basic or Sheffer polynomials");
    add_common(polys);
    polys->add_option("--n", n, "Largest index")->capture_default_str();
    polys->add_option("--kind", kind_name, "basic or sheffer")
        ->check(CLI::IsMember({"basic", "sheffer"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Cross-check every engine and closed form");
    add_common(verify);
    verify->add_option("--max-n", max_n, "Largest n")->capture_default_str();
    verify->add_option("--max-m", max_m, "Largest m")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    lc_pattern* raw_pattern = nullptr;
    if (lc_status st = lc_pattern_parse(pattern_text.c_str(), &raw_pattern); st != LC_OK)
        return report_failure(st);
    std::unique_ptr<lc_pattern, PatternDeleter> pattern(raw_pattern);
    const lc_format format = kFormats.at(format_name);

    if (*analyze) {
        const int code = emit([&](char** out) { return lc_analyze_render(pattern.get(), format, out); });
        if (code != kOk)
            return code;
        lc_pattern_info info{};
        lc_pattern_info_get(pattern.get(), &info);
        if (require_depth_zero && !info.depth_zero) {
            std::cerr << "latticecount: pattern " << pattern_text << " is not depth-zero\n";
            return kPatternClass;
        }
        return kOk;
    }

    if (*table) {
        lc_table* raw = nullptr;
        if (lc_status st = lc_table_create(pattern.get(), kEngines.at(engine_name), max_n, max_m, &raw); st != LC_OK)
            return report_failure(st);
        std::unique_ptr<lc_table, TableDeleter> handle(raw);
        return emit([&](char** out) { return lc_table_render(handle.get(), format, out); });
    }

    if (*dyck) {
        return emit([&](char** out) {
            return lc_dyck_render(pattern.get(), kEngines.at(engine_name), n, format, out);
        });
    }

    if (*polys) {
        lc_polys* raw = nullptr;
        if (lc_status st = lc_polys_create(pattern.get(), kKinds.at(kind_name), n, &raw); st != LC_OK)
            return report_failure(st);
        std::unique_ptr<lc_polys, PolysDeleter> handle(raw);
        return emit([&](char** out) { return lc_polys_render(handle.get(), format, out); });
    }

    if (*verify) {
        lc_report* raw = nullptr;
        if (lc_status st = lc_verify(pattern.get(), max_n, max_m, &raw); st != LC_OK)
            return report_failure(st);
        std::unique_ptr<lc_report, ReportDeleter> handle(raw);
        if (const int code = emit([&](char** out) { return lc_report_render(handle.get(), format, out); });
            code != kOk)
            return code;
        return lc_report_passed(handle.get()) ? kOk : kVerifyFailed;
    }
    return kParseError;
}
