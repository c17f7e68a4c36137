#include "latticecount/verify.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "latticecount/error.hpp"
#include "latticecount/focalc.hpp"
#include "latticecount/formulas.hpp"
#include "latticecount/recurrence.hpp"

namespace latticecount {

namespace {

std::string cell_text(long n, long m) {
    return "(" + std::to_string(n) + ", " + std::to_string(m) + ")";
}

CheckResult compare_tables(std::string name, const BallotTable& expected, const BallotTable& actual) {
    CheckResult r{std::move(name), true, {}, std::nullopt};
    if (auto diff = first_difference(expected, actual)) {
        r.passed = false;
        r.counterexample = diff;
        r.detail = "differs at " + cell_text(diff->n, diff->m) + ": expected " +
                   to_string(expected.at(diff->n, diff->m)) + ", got " +
                   to_string(actual.at(diff->n, diff->m));
    } else {
        r.detail = "agree on all valid cells with n <= " + std::to_string(std::min(expected.max_n(), actual.max_n())) +
                   ", m <= " + std::to_string(std::min(expected.max_m(), actual.max_m()));
    }
    return r;
}

// Compares a closed form against the reference table over every valid cell.
CheckResult compare_formula(std::string name, const BallotTable& reference,
                            const std::function<BigInt(long, long)>& formula) {
    CheckResult r{std::move(name), true, {}, std::nullopt};
    try {
        for (long n = 0; n <= reference.max_n() && r.passed; ++n) {
            for (long m = std::max(0L, n - 1); m <= reference.max_m(); ++m) {
                const BigInt v = formula(n, m);
                if (v != reference.at(n, m)) {
                    r.passed = false;
                    r.counterexample = CellMismatch{n, m};
                    r.detail = "differs at " + cell_text(n, m) + ": expected " +
                               to_string(reference.at(n, m)) + ", got " + to_string(v);
                    break;
                }
            }
        }
    } catch (const Error& e) {
        r.passed = false;
        r.detail = e.what();
    }
    if (r.passed)
        r.detail = "matches every valid cell";
    return r;
}

CheckResult compare_diagonal(std::string name, const BallotTable& reference, const std::function<BigInt(long)>& formula) {
    CheckResult r{std::move(name), true, "matches the diagonal", std::nullopt};
    const long limit = std::min(reference.max_n(), reference.max_m());
    try {
        for (long n = 0; n <= limit; ++n) {
            const BigInt v = formula(n);
            if (v != reference.at(n, n)) {
                r.passed = false;
                r.counterexample = CellMismatch{n, n};
                r.detail = "differs at n = " + std::to_string(n) + ": expected " + to_string(reference.at(n, n)) +
                           ", got " + to_string(v);
                break;
            }
        }
    } catch (const Error& e) {
        r.passed = false;
        r.detail = e.what();
    }
    return r;
}

template <class Body>
CheckResult guarded(std::string name, Body&& body) {
    try {
        return body();
    } catch (const Error& e) {
        return CheckResult{std::move(name), false, std::string(error_code_name(e.code())) + ": " + e.what(),
                           std::nullopt};
    }
}

} // namespace

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool is_r_power(const Pattern& p) {
    return p.size() >= 2 && p.count(Step::Right) == p.size();
}

std::optional<long> r_ur_power(const Pattern& p) {
    if (p.size() < 3 || p.size() % 2 == 0 || p[0] != Step::Right)
        return std::nullopt;
    for (std::size_t i = 1; i < p.size(); i += 2)
        if (p[i] != Step::Up || p[i + 1] != Step::Right)
            return std::nullopt;
    return static_cast<long>(p.size() / 2);
}

VerificationReport verify_pattern(const Pattern& pattern, const VerifyOptions& options) {
    const PatternProfile pr = profile(pattern);
    const long max_n = options.max_n;
    const long max_m = options.max_m;
    if (max_n < 0 || max_m < 0)
        throw Error(ErrorCode::InvalidArgument, "max_n and max_m must be nonnegative");
    const long order = max_n + 1;
    // Throws the pattern-class errors before any check runs.
    const RecurrenceSpec spec = build_recurrence(pr, order);

    VerificationReport report;
    report.pattern = pattern.str();
    report.max_n = max_n;
    report.max_m = max_m;
    auto& checks = report.checks;

    {
        const auto t1 = validate_theorem1(spec);
        std::string detail = "drop-1 coefficient sum " + to_string(t1.drop_one_sum) +
                             (t1.shifts_bounded ? ", every shift <= drop + 1" : ", shift bound violated");
        checks.push_back({"theorem1-conditions", t1.ok(), detail,
                          std::nullopt});
    }

    const BallotTable automaton = oracle::automaton_table(pattern, max_n, max_m);
    const BallotTable recurrence = generate_table(spec, pattern, max_n, max_m);

    checks.push_back(guarded("boundary-values", [&] {
        CheckResult r{"boundary-values", true, "s_0(m) = 1 and s_n(n-1) = 0", std::nullopt};
        for (long m = 0; m <= max_m && r.passed; ++m)
            if (recurrence.at(0, m) != 1) {
                r.passed = false;
                r.counterexample = CellMismatch{0, m};
            }
        for (long n = 1; n <= max_n && n - 1 <= max_m && r.passed; ++n)
            if (recurrence.at(n, n - 1) != 0) {
                r.passed = false;
                r.counterexample = CellMismatch{n, n - 1};
            }
        if (!r.passed)
            r.detail = "boundary value wrong at " + cell_text(r.counterexample->n, r.counterexample->m);
        return r;
    }));

    checks.push_back(compare_tables("recurrence-vs-automaton", automaton, recurrence));

    checks.push_back(guarded("dfs-vs-automaton", [&] {
        const long limit = static_cast<long>(std::min(options.dfs_cap, options.dfs_limit));
        const long dn = std::min(max_n, limit / 2);
        const long dm = std::min(max_m, limit - dn);
        const BallotTable dfs = oracle::dfs_table(pattern, dn, dm, options.dfs_cap);
        return compare_tables("dfs-vs-automaton", dfs, automaton);
    }));

    checks.push_back(guarded("column-polynomials", [&] {
        CheckResult r{"column-polynomials", true, {}, std::nullopt};
        long fitted = 0;
        for (long n = 0; n <= max_n; ++n) {
            const long first = n == 0 ? 0 : n - 1;
            if (first + n > max_m)
                break;
            try {
                const RationalPolynomial f = fit_column_polynomial(recurrence, n);
                const RationalPolynomial diff = f - f.shifted(Rational(-1));
                if (f.degree() != n || (n >= 1 && diff.degree() != n - 1))
                    throw Error(ErrorCode::PolynomialMismatch, "column " + std::to_string(n) + " has wrong degree");
            } catch (const Error& e) {
                r.passed = false;
                r.counterexample = CellMismatch{n, first};
                r.detail = e.what();
                return r;
            }
            ++fitted;
        }
        r.detail = std::to_string(fitted) + " columns fitted with degree n and reproduced exactly";
        return r;
    }));

    const focalc::OperatorEquation eq = focalc::operator_equation(pr);
    TruncSeries tau;
    try {
        tau = focalc::solve_operator_equation(eq, order);
    } catch (const Error& e) {
        checks.push_back({"operator-equation", false, e.what(), std::nullopt});
        return report;
    }

    checks.push_back(guarded("operator-equation", [&] {
        const bool ok = focalc::operator_residual(eq, tau).is_zero() && tau[1] == 1;
        return CheckResult{"operator-equation", ok,
                           ok ? "residual vanishes to order " + std::to_string(order) + ", tau_1 = 1"
                              : "nonzero residual",
                           std::nullopt};
    }));

    const focalc::PolynomialList basic = focalc::basic_sequence(tau);
    const focalc::PolynomialList sheffer = focalc::abelize(basic, 1, -1);

    checks.push_back(guarded("transfer-formula-vs-generating-function", [&] {
        for (long n = 0; n <= order; ++n) {
            const RationalPolynomial viaTransfer = focalc::transfer_formula_basic(eq, n, order);
            if (viaTransfer != basic[static_cast<std::size_t>(n)])
                return CheckResult{"transfer-formula-vs-generating-function", false,
                                   "b_" + std::to_string(n) + " differs: " + viaTransfer.str() + " vs " +
                                       basic[static_cast<std::size_t>(n)].str(),
                                   std::nullopt};
        }
        return CheckResult{"transfer-formula-vs-generating-function", true,
                           "b_0..b_" + std::to_string(order) + " agree", std::nullopt};
    }));

    checks.push_back(guarded("operator-identity", [&] {
        if (auto n = focalc::operator_identity_failure(basic, spec))
            return CheckResult{"operator-identity", false, "fails for b_" + std::to_string(*n), std::nullopt};
        return CheckResult{"operator-identity", true,
                           "nabla b_n matches the recurrence terms for n <= " + std::to_string(order),
                           std::nullopt};
    }));

    checks.push_back(guarded("generating-function-identity", [&] {
        if (auto n = focalc::generating_function_failure(sheffer, tau))
            return CheckResult{"generating-function-identity", false, "fails at t^" + std::to_string(*n),
                               std::nullopt};
        return CheckResult{"generating-function-identity", true,
                           "(1 - t beta') e^{(x+1) beta} matches to order " + std::to_string(order), std::nullopt};
    }));

    checks.push_back(guarded("sequence-normalization", [&] {
        for (std::size_t n = 0; n < basic.size(); ++n) {
            const Rational inv_fact = Rational(1) / Rational(factorial(static_cast<long>(n)));
            const Rational delta = n == 0 ? 1 : 0;
            const bool ok = basic[n](Rational(0)) == delta && basic[n].degree() == static_cast<long>(n) &&
                            sheffer[n].degree() == static_cast<long>(n) && basic[n].leading() == inv_fact &&
                            sheffer[n].leading() == inv_fact &&
                            sheffer[n](Rational(static_cast<long>(n) - 1)) == delta;
            if (!ok)
                return CheckResult{"sequence-normalization", false,
                                   "normalization fails at n = " + std::to_string(n), std::nullopt};
        }
        return CheckResult{"sequence-normalization", true,
                           "b_n(0) = s_n(n-1) = delta, degree n, leading coefficient 1/n!", std::nullopt};
    }));

    checks.push_back(guarded("engine-vs-automaton", [&] {
        BallotTable engine(pattern, max_n, max_m);
        for (long n = 0; n <= max_n; ++n)
            for (long m = std::max(0L, n - 1); m <= max_m; ++m) {
                const Rational v = sheffer[static_cast<std::size_t>(n)](Rational(m));
                if (v.get_den() != 1)
                    return CheckResult{"engine-vs-automaton", false, "non-integer value at " + cell_text(n, m),
                                       CellMismatch{n, m}};
                engine.at(n, m) = v.get_num();
            }
        return compare_tables("engine-vs-automaton", automaton, engine);
    }));

    // Closed forms that apply to this pattern's shape.
    const long a = pr.r_count;
    const long c = pr.u_count;
    if (pr.bifixes.empty() && c >= 1) {
        checks.push_back(compare_formula("closed-form-bifix-free", automaton,
                                         [&](long n, long m) { return formulas::s_bifix_free(n, m, a, c); }));
        checks.push_back(compare_diagonal("closed-form-bifix-free-dyck", automaton,
                                          [&](long n) { return formulas::dyck_bifix_free(n, a, c); }));
    }
    if (pr.bifixes.size() == 1) {
        const long b = pr.bifixes[0].trunc_r;
        const long d = pr.bifixes[0].trunc_u;
        checks.push_back(compare_formula("closed-form-one-bifix", automaton, [&](long n, long m) {
            return formulas::s_one_bifix(n, m, a, c, b, d);
        }));
        if (a == b + 1 && c == d && d >= 1) {
            checks.push_back(compare_formula("closed-form-rpr", automaton,
                                             [&](long n, long m) { return formulas::s_rpr(n, m, b, d); }));
            checks.push_back(compare_diagonal("closed-form-rpr-dyck", automaton,
                                              [&](long n) { return formulas::dyck_rpr(n, b, d); }));
        }
    }
    if (pattern.str() == "rur")
        checks.push_back(compare_diagonal("closed-form-rur-catalan", automaton,
                                          [](long n) { return formulas::dyck_rur_catalan(n); }));
    if (is_r_power(pattern))
        checks.push_back(compare_formula("closed-form-r-power", automaton, [&](long n, long m) {
            return formulas::s_r_power(n, m, a);
        }));
    if (auto k = r_ur_power(pattern)) {
        checks.push_back(compare_formula("closed-form-r-ur-k", automaton,
                                         [&](long n, long m) { return formulas::s_r_ur_k(n, m, *k); }));
        checks.push_back(compare_diagonal("closed-form-r-ur-k-dyck", automaton,
                                          [&](long n) { return formulas::dyck_r_ur_k(n, *k); }));
    }
    return report;
}

} // namespace latticecount
