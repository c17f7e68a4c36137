// Acceptance suite: one PASS/FAIL line per criterion. Optional argv[1] is the
// path of the latticecount CLI, used for the command-line checks.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "latticecount/error.hpp"
#include "latticecount/focalc.hpp"
#include "latticecount/formulas.hpp"
#include "latticecount/oracle.hpp"
#include "latticecount/recurrence.hpp"
#include "latticecount/verify.hpp"
#include "reference_tables.hpp"

using namespace latticecount;
using Clock = std::chrono::steady_clock;

namespace {

const char* const kSix[] = {"rur", "uurrr", "urruurr", "rururrur", "rrr", "rurur"};

std::string g_cli;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok)
            detail = why;
        ok = false;
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string cell(long n, long m) { return "(" + std::to_string(n) + ", " + std::to_string(m) + ")"; }

struct Run {
    int exit_code = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    Run r;
    const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Cells of a CSV table document: rows m descending, first column is m.
bool csv_matches_reference(const std::string& csv, const long (&table)[9][10], std::string& why) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line); // header
    for (long m = 8; m >= 0; --m) {
        if (!std::getline(in, line)) {
            why = "CLI output ends early";
            return false;
        }
        std::vector<std::string> fields;
        std::stringstream row(line);
        std::string f;
        while (std::getline(row, f, ','))
            fields.push_back(f);
        for (long n = 0; n <= 9; ++n) {
            const long expected = reference::at(table, n, m);
            if (expected < 0)
                continue;
            const auto idx = static_cast<std::size_t>(n + 1);
            if (idx >= fields.size() || fields[idx] != std::to_string(expected)) {
                why = "CLI cell " + cell(n, m) + " differs";
                return false;
            }
        }
    }
    return true;
}

Outcome compare_with_reference(const BallotTable& t, const long (&table)[9][10], const std::string& label) {
    Outcome o;
    long cells = 0;
    for (long m = 0; m <= 8; ++m)
        for (long n = 0; n <= 9; ++n) {
            const long expected = reference::at(table, n, m);
            if (expected < 0)
                continue;
            ++cells;
            if (t.at(n, m) != expected)
                o.fail(label + " cell " + cell(n, m) + " = " + to_string(t.at(n, m)) + ", expected " +
                       std::to_string(expected));
        }
    if (o.ok)
        o.detail = std::to_string(cells) + " listed cells";
    return o;
}

Outcome criterion1() {
    const Pattern p = parse_pattern("rur");
    const auto start = Clock::now();
    const BallotTable rec = recurrence_table(p, 9, 8);
    const double elapsed = seconds_since(start);
    Outcome o = compare_with_reference(rec, reference::kRurTable, "recurrence");
    long blank = 0;
    for (long n = 0; n <= 9; ++n)
        for (long m = 0; m <= 8; ++m)
            if (!BallotTable::valid(n, m)) {
                ++blank;
                if (rec.at(n, m) != 0)
                    o.fail("nonzero cell below the boundary at " + cell(n, m));
            }
    if (elapsed >= 1.0)
        o.fail("recurrence took " + std::to_string(elapsed) + " s");
    if (first_difference(rec, focalc::engine_table(p, 9, 8)))
        o.fail("engine table differs");
    if (first_difference(rec, oracle::automaton_table(p, 9, 8)))
        o.fail("automaton table differs");
    if (!g_cli.empty()) {
        const auto cli_start = Clock::now();
        const Run r = run_cli("table rur --max-n 9 --max-m 8 --engine recurrence --format csv");
        const double cli_elapsed = seconds_since(cli_start);
        std::string why;
        if (r.exit_code != 0)
            o.fail("CLI exit " + std::to_string(r.exit_code));
        else if (!csv_matches_reference(r.out, reference::kRurTable, why))
            o.fail(why);
        if (cli_elapsed >= 1.0)
            o.fail("CLI took " + std::to_string(cli_elapsed) + " s");
    }
    if (o.ok)
        o.detail += " + " + std::to_string(blank) + " blank = 90 cells exact; recurrence = engine = automaton";
    return o;
}

Outcome criterion2() {
    const Pattern p = parse_pattern("urruurr");
    const BallotTable rec = recurrence_table(p, 9, 8);
    Outcome o = compare_with_reference(rec, reference::kUrruurrTable, "recurrence");
    for (long n = 0; n <= 9; ++n)
        for (long m = std::max(0L, n - 1); m <= 8; ++m)
            if (formulas::s_one_bifix(n, m, 4, 3, 2, 2) != rec.at(n, m))
                o.fail("s_one_bifix differs at " + cell(n, m));
    if (!g_cli.empty()) {
        const Run r = run_cli("table urruurr --max-n 9 --max-m 8 --format csv");
        std::string why;
        if (r.exit_code != 0)
            o.fail("CLI exit " + std::to_string(r.exit_code));
        else if (!csv_matches_reference(r.out, reference::kUrruurrTable, why))
            o.fail(why);
    }
    if (o.ok)
        o.detail += "; closed form matches every cell";
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (long n = 0; n <= 8; ++n)
        if (formulas::dyck_rur_catalan(n) != reference::at(reference::kRurTable, n, n))
            o.fail("differs from the reference diagonal at n = " + std::to_string(n));
    const Pattern p = parse_pattern("rur");
    for (long n = 0; n <= 12; ++n)
        if (formulas::dyck_rur_catalan(n) != oracle::dyck_count(p, n))
            o.fail("differs from the oracle at n = " + std::to_string(n));
    if (o.ok)
        o.detail = "n <= 8 reference, n <= 12 oracle";
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (const char* text : kSix) {
        const auto eq = focalc::operator_equation(profile(parse_pattern(text)));
        const auto gf = focalc::basic_sequence(focalc::solve_operator_equation(eq, 10));
        for (long n = 0; n <= 10; ++n)
            if (focalc::transfer_formula_basic(eq, n, 10) != gf[static_cast<std::size_t>(n)])
                o.fail(std::string(text) + " differs at n = " + std::to_string(n));
    }
    if (o.ok)
        o.detail = "six patterns, n <= 10, exact polynomials";
    return o;
}

Outcome criterion5() {
    const long max_col = 8;
    Outcome o;
    for (const char* text : kSix) {
        const Pattern p = parse_pattern(text);
        const BallotTable t = recurrence_table(p, max_col, 2 * max_col + 6);
        for (long n = 0; n <= max_col; ++n) {
            const long max_m = 2 * n + 6;
            const long first = n == 0 ? 0 : n - 1;
            std::vector<std::pair<Rational, Rational>> points;
            for (long m = first; m <= first + n; ++m)
                points.emplace_back(Rational(m), Rational(t.at(n, m)));
            const RationalPolynomial f = interpolate(points);
            if (f.degree() > n)
                o.fail(std::string(text) + " column " + std::to_string(n) + " degree too high");
            for (long m = first; m <= max_m; ++m)
                if (f(Rational(m)) != Rational(t.at(n, m)))
                    o.fail(std::string(text) + " column " + std::to_string(n) + " misses m = " + std::to_string(m));
        }
    }
    if (o.ok)
        o.detail = "six patterns, columns n <= " + std::to_string(max_col) + ", m <= 2n + 6";
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (const char* text : kSix) {
        const auto pr = profile(parse_pattern(text));
        const auto tau = focalc::solve_operator_equation(focalc::operator_equation(pr), 10);
        const auto seq = focalc::sheffer_from_pattern(pr, 10);
        if (auto n = focalc::operator_identity_failure(seq.basic, build_recurrence(pr, 10)))
            o.fail(std::string(text) + " operator identity fails at n = " + std::to_string(*n));
        if (auto n = focalc::generating_function_failure(seq.sheffer, tau))
            o.fail(std::string(text) + " generating function fails at t^" + std::to_string(*n));
    }
    if (o.ok)
        o.detail = "six patterns, n <= 10, both identities exact";
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (long a = 2; a <= 4; ++a) {
        const Pattern p = parse_pattern(std::string(static_cast<std::size_t>(a), 'r'));
        for (long n = 0; n <= 6; ++n)
            for (long x = std::max(0L, n - 1); x <= 8; ++x)
                if (formulas::s_r_power(n, x, a) != oracle::count_automaton(p, n, x))
                    o.fail("r^" + std::to_string(a) + " differs at " + cell(n, x));
    }
    for (long k = 1; k <= 3; ++k) {
        std::string text = "r";
        for (long i = 0; i < k; ++i)
            text += "ur";
        const Pattern p = parse_pattern(text);
        for (long n = 0; n <= 7; ++n) {
            const BigInt v = formulas::dyck_r_ur_k(n, k);
            if (v != oracle::dyck_count(p, n))
                o.fail(text + " differs at n = " + std::to_string(n));
            if (k == 1 && v != formulas::dyck_rur_catalan(n))
                o.fail("rur differs from the Catalan sum at n = " + std::to_string(n));
        }
    }
    if (o.ok)
        o.detail = "r^a for a = 2..4; r(ur)^k for k = 1..3";
    return o;
}

Outcome criterion8() {
    Outcome o;
    const auto start = Clock::now();
    long patterns = 0;
    VerifyOptions options;
    options.max_n = 8;
    options.max_m = 8;
    for (std::size_t len = 1; len <= 6; ++len)
        for (const Pattern& p : all_patterns(len)) {
            const auto pr = profile(p);
            if (!pr.depth_zero || pr.r_count < 2)
                continue;
            ++patterns;
            const VerificationReport report = verify_pattern(p, options);
            if (!report.passed())
                for (const auto& c : report.checks)
                    if (!c.passed)
                        o.fail(p.str() + ": " + c.name + " " + c.detail);
        }
    const double elapsed = seconds_since(start);
    if (elapsed >= 120.0)
        o.fail("sweep took " + std::to_string(elapsed) + " s");
    if (o.ok) {
        std::ostringstream d;
        d.precision(2);
        d << std::fixed << patterns << " patterns verified in " << elapsed << " s";
        o.detail = d.str();
    }
    return o;
}

Outcome criterion9() {
    Outcome o;
    long bifixes = 0;
    for (std::size_t len = 1; len <= 12; ++len)
        for (const Pattern& p : all_patterns(len)) {
            if (!is_depth_zero(p))
                continue;
            for (const auto& b : profile(p).bifixes) {
                ++bifixes;
                if (b.trunc_r < b.trunc_u)
                    o.fail(p.str() + " bifix " + b.bifix.str() + " has b < d");
            }
        }
    long refused = 0;
    for (std::size_t len = 1; len <= 8; ++len)
        for (const Pattern& p : all_patterns(len)) {
            const auto pr = profile(p);
            if (pr.depth_zero)
                continue;
            auto expect_refusal = [&](const char* what, const std::function<void()>& fn) {
                try {
                    fn();
                    o.fail(p.str() + ": " + what + " accepted a nonzero-depth pattern");
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::DepthNonzero)
                        o.fail(p.str() + ": " + what + " raised " + error_code_name(e.code()));
                }
            };
            expect_refusal("recurrence", [&] { recurrence_table(p, 3, 3); });
            expect_refusal("engine", [&] { focalc::engine_table(p, 3, 3); });
            expect_refusal("verify", [&] { verify_pattern(p, VerifyOptions{}); });
            if (!g_cli.empty()) {
                const Run analyze = run_cli("analyze " + p.str() + " --format json");
                if (analyze.exit_code != 0 || analyze.out.find("\"depth_zero\": false") == std::string::npos)
                    o.fail(p.str() + ": analyze does not flag depth_zero=false");
                for (const std::string& cmd : {"table " + p.str() + " --engine recurrence",
                                              "table " + p.str() + " --engine engine", "verify " + p.str()}) {
                    const Run r = run_cli(cmd);
                    if (r.exit_code != 3)
                        o.fail("`" + cmd + "` exited " + std::to_string(r.exit_code));
                }
            }
            ++refused;
        }
    if (o.ok)
        o.detail = std::to_string(bifixes) + " bifixes satisfy b >= d; " + std::to_string(refused) +
                   " nonzero-depth patterns refused with exit 3";
    return o;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1)
        g_cli = argv[1];

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"rur table reproduction", criterion1},
        {"urruurr table reproduction", criterion2},
        {"Catalan alternating sum", criterion3},
        {"transfer formula vs generating function", criterion4},
        {"column polynomials", criterion5},
        {"operator and generating-function identities", criterion6},
        {"family formulas", criterion7},
        {"small-pattern sweep", criterion8},
        {"bifix dimensions and depth refusal", criterion9},
    };

    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.ok)
            ++failures;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << index << "  " << name << ": " << o.detail << "\n";
    }
    std::cout << (9 - failures) << "/9 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
