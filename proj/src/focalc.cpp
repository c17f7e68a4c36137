#include "latticecount/focalc.hpp"

#include <algorithm>
#include <string>

#include "latticecount/error.hpp"

namespace latticecount::focalc {

namespace {

// Series in t whose coefficients are polynomials in q = E^{-1}.
using OperatorSeries = std::vector<RationalPolynomial>;

OperatorSeries op_zero(long order) { return OperatorSeries(static_cast<std::size_t>(order + 1)); }

OperatorSeries op_multiply(const OperatorSeries& a, const OperatorSeries& b) {
    const long order = static_cast<long>(a.size()) - 1;
    OperatorSeries out = op_zero(order);
    for (long i = 0; i <= order; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero())
            continue;
        for (long j = 0; i + j <= order; ++j)
            out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    return out;
}

RationalPolynomial q_power(long k, const Rational& c = 1) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(k + 1), Rational(0));
    coeffs.back() = c;
    return RationalPolynomial(std::move(coeffs));
}

void require_equation(const OperatorEquation& eq) {
    if (eq.a < 2)
        throw Error(ErrorCode::PatternTooShort, "operator equation needs a >= 2");
    for (const auto& [b, d] : eq.bifix_dims)
        if (b < d || d < 0 || b < 1)
            throw Error(ErrorCode::DepthNonzero, "bifix dimensions must satisfy b >= d >= 0, b >= 1");
}

TruncSeries residual_in_w(const OperatorEquation& eq, const TruncSeries& w) {
    const long order = w.order();
    TruncSeries denom = TruncSeries::one(order);
    for (const auto& [b, d] : eq.bifix_dims)
        denom += TruncSeries::monomial(order, b) * w.pow(d);
    const TruncSeries lhs = TruncSeries::one(order) - w - TruncSeries::monomial(order, 1);
    return lhs * denom + TruncSeries::monomial(order, eq.a) * w.pow(eq.c);
}

} // namespace

OperatorEquation operator_equation(const PatternProfile& pr) {
    if (!pr.depth_zero)
        throw Error(ErrorCode::DepthNonzero, "pattern " + pr.pattern.str() + " is not depth-zero");
    if (pr.r_count < 2)
        throw Error(ErrorCode::PatternTooShort,
                    "pattern " + pr.pattern.str() + " has fewer than two r steps");
    OperatorEquation eq;
    eq.a = pr.r_count;
    eq.c = pr.u_count;
    for (const auto& b : pr.bifixes)
        eq.bifix_dims.emplace_back(b.trunc_r, b.trunc_u);
    return eq;
}

TruncSeries operator_residual(const OperatorEquation& eq, const TruncSeries& tau) {
    return residual_in_w(eq, series_inverse(TruncSeries::one(tau.order()) + tau));
}

TruncSeries solve_operator_equation(const OperatorEquation& eq, long order) {
    require_equation(eq);
    if (order < 1)
        throw Error(ErrorCode::InvalidArgument, "order must be positive");

    // The residual's t^n coefficient is (terms in w_0..w_{n-1}) - w_n, since every
    // other occurrence of w carries a positive power of t.
    TruncSeries w = TruncSeries::one(order);
    for (long n = 1; n <= order; ++n) {
        w[n] = 0;
        w[n] = residual_in_w(eq, w)[n];
    }
    if (!residual_in_w(eq, w).is_zero())
        throw Error(ErrorCode::NoSolution, "degree-by-degree elimination left a nonzero residual");

    TruncSeries tau = series_inverse(w);
    tau[0] -= 1;
    return tau;
}

PolynomialList basic_sequence(const TruncSeries& tau) {
    const long order = tau.order();
    if (tau[0] != 0 || order < 1 || tau[1] == 0)
        throw Error(ErrorCode::NotDeltaSeries, "tau must have zero constant and nonzero linear term");

    const TruncSeries log_series = series_log(TruncSeries::one(order) + tau);
    // coeffs[n][k] = [t^n] L^k / k!
    std::vector<std::vector<Rational>> coeffs(static_cast<std::size_t>(order + 1),
                                              std::vector<Rational>(static_cast<std::size_t>(order + 1)));
    TruncSeries power = TruncSeries::one(order);
    Rational inv_fact = 1;
    for (long k = 0; k <= order; ++k) {
        if (k > 0) {
            power = power * log_series;
            inv_fact /= k;
        }
        for (long n = k; n <= order; ++n)
            coeffs[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = power[n] * inv_fact;
    }
    PolynomialList out;
    out.reserve(coeffs.size());
    for (auto& row : coeffs)
        out.emplace_back(std::move(row));
    return out;
}

PolynomialList nabla_operator_series(const OperatorEquation& eq, long order) {
    require_equation(eq);
    // S = sum_i t^{b_i} q^{d_i};  1 / (1 + S) = sum_k (-S)^k, finite since S = O(t).
    OperatorSeries s = op_zero(order);
    for (const auto& [b, d] : eq.bifix_dims)
        if (b <= order)
            s[static_cast<std::size_t>(b)] += q_power(d);
    OperatorSeries geometric = op_zero(order);
    OperatorSeries term = op_zero(order);
    term[0] = RationalPolynomial::constant(1);
    for (long k = 0; k <= order; ++k) {
        for (long j = 0; j <= order; ++j)
            geometric[static_cast<std::size_t>(j)] += term[static_cast<std::size_t>(j)];
        term = op_multiply(term, s);
        for (auto& p : term)
            p *= Rational(-1);
    }
    OperatorSeries head = op_zero(order);
    if (eq.a <= order)
        head[static_cast<std::size_t>(eq.a)] = q_power(eq.c);
    OperatorSeries out = op_multiply(head, geometric);
    for (auto& p : out)
        p *= Rational(-1);
    if (order >= 1)
        out[1] += RationalPolynomial::constant(1);
    return out;
}

RationalPolynomial transfer_formula_basic(const OperatorEquation& eq, long n, long order) {
    if (n < 0 || n > order)
        throw Error(ErrorCode::InvalidArgument, "need 0 <= n <= order");
    require_equation(eq);
    if (n == 0)
        return RationalPolynomial::constant(1);

    const OperatorSeries tau = nabla_operator_series(eq, order);
    if (tau[1] != RationalPolynomial::constant(1))
        throw Error(ErrorCode::NoSolution, "leading operator coefficient is not invertible");

    RationalPolynomial sum;
    OperatorSeries power = tau;
    for (long i = 1; i <= n; ++i) {
        if (i > 1)
            power = op_multiply(power, tau);
        // (1/x) a_i(x) = (x+1)(x+2)...(x+i-1) / i!
        RationalPolynomial reduced = RationalPolynomial::constant(Rational(1, 1) / Rational(factorial(i)));
        for (long k = 1; k < i; ++k)
            reduced = reduced * RationalPolynomial::linear_root(Rational(-k));
        const RationalPolynomial& coeff = power[static_cast<std::size_t>(n)];
        for (long s = 0; s <= coeff.degree(); ++s) {
            const Rational c = coeff.coeff(s);
            if (c != 0)
                sum += reduced.shifted(Rational(-s)) * c; // E^{-s}
        }
    }
    return sum * RationalPolynomial::x();
}

PolynomialList abelize(const PolynomialList& basic, long alpha, long gamma) {
    PolynomialList out;
    out.reserve(basic.size());
    for (std::size_t n = 0; n < basic.size(); ++n) {
        if (n == 0) {
            if (basic[0] != RationalPolynomial::constant(1))
                throw Error(ErrorCode::NotBasic, "b_0 must be 1");
            out.push_back(RationalPolynomial::constant(1));
            continue;
        }
        if (basic[n](Rational(0)) != 0)
            throw Error(ErrorCode::NotBasic, "b_" + std::to_string(n) + "(0) must vanish");
        const RationalPolynomial quotient = basic[n].divided_by_x().shifted(Rational(-gamma));
        const long root = alpha * static_cast<long>(n) + gamma;
        out.push_back(RationalPolynomial::linear_root(Rational(root)) * quotient);
    }
    return out;
}

std::optional<long> operator_identity_failure(const PolynomialList& basic, const RecurrenceSpec& spec) {
    // Terms beyond the truncation order were never generated.
    const long limit = std::min<long>(static_cast<long>(basic.size()) - 1, spec.truncation_order);
    for (long n = 0; n <= limit; ++n) {
        const auto& bn = basic[static_cast<std::size_t>(n)];
        const RationalPolynomial nabla = bn - bn.shifted(Rational(-1));
        RationalPolynomial rhs;
        for (const auto& t : spec.terms)
            if (t.drop <= n)
                rhs += basic[static_cast<std::size_t>(n - t.drop)].shifted(Rational(-t.shift)) *
                       Rational(t.coeff);
        if (nabla != rhs)
            return n;
    }
    return std::nullopt;
}

std::optional<long> generating_function_failure(const PolynomialList& sheffer, const TruncSeries& tau) {
    const long order = tau.order();
    const TruncSeries beta = series_log(TruncSeries::one(order) + tau);
    TruncSeries sigma = TruncSeries::one(order) - TruncSeries::monomial(order, 1) * beta.derivative();

    // e^{y beta}: [t^n] = sum_k [t^n] beta^k / k! y^k, then y = x + 1.
    PolynomialList exp_part;
    {
        std::vector<std::vector<Rational>> coeffs(static_cast<std::size_t>(order + 1),
                                                  std::vector<Rational>(static_cast<std::size_t>(order + 1)));
        TruncSeries power = TruncSeries::one(order);
        for (long k = 0; k <= order; ++k) {
            if (k > 0)
                power = power * beta * Rational(1, static_cast<unsigned long>(k));
            for (long n = 0; n <= order; ++n)
                coeffs[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = power[n];
        }
        for (auto& row : coeffs)
            exp_part.push_back(RationalPolynomial(std::move(row)).shifted(Rational(1)));
    }
    const long limit = std::min<long>(order, static_cast<long>(sheffer.size()) - 1);
    for (long n = 0; n <= limit; ++n) {
        RationalPolynomial rhs;
        for (long j = 0; j <= n; ++j)
            if (sigma[j] != 0)
                rhs += exp_part[static_cast<std::size_t>(n - j)] * sigma[j];
        if (rhs != sheffer[static_cast<std::size_t>(n)])
            return n;
    }
    return std::nullopt;
}

SequencePair sheffer_from_pattern(const PatternProfile& pr, long order) {
    const OperatorEquation eq = operator_equation(pr);
    const TruncSeries tau = solve_operator_equation(eq, order);
    SequencePair pair;
    pair.basic = basic_sequence(tau);
    pair.sheffer = abelize(pair.basic, 1, -1);
    if (auto n = generating_function_failure(pair.sheffer, tau))
        throw Error(ErrorCode::IdentityViolation,
                    "generating-function identity fails at order " + std::to_string(*n));
    return pair;
}

BallotTable engine_table(const Pattern& pattern, long max_n, long max_m) {
    const SequencePair pair = sheffer_from_pattern(profile(pattern), max_n + 1);
    BallotTable table(pattern, max_n, max_m);
    for (long n = 0; n <= max_n; ++n) {
        for (long m = std::max(0L, n - 1); m <= max_m; ++m) {
            const Rational v = pair.sheffer[static_cast<std::size_t>(n)](Rational(m));
            if (v.get_den() != 1)
                throw Error(ErrorCode::IdentityViolation, "s_" + std::to_string(n) + "(" +
                                                              std::to_string(m) + ") is not an integer");
            table.at(n, m) = v.get_num();
        }
    }
    return table;
}

} // namespace latticecount::focalc
