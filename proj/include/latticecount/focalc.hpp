#ifndef LATTICECOUNT_FOCALC_HPP
#define LATTICECOUNT_FOCALC_HPP

#include <optional>
#include <utility>
#include <vector>

#include "latticecount/pattern.hpp"
#include "latticecount/polynomial.hpp"
#include "latticecount/recurrence.hpp"
#include "latticecount/series.hpp"
#include "latticecount/table.hpp"

// Finite operator calculus for the avoidance recurrences. The unknown delta
// operator B is carried as the formal variable t; E^{-1} is the shift by -1.
namespace latticecount::focalc {

/// nabla = B - B^a E^{-c} / (1 + sum_i B^{b_i} E^{-d_i})
struct OperatorEquation {
    long a = 0;
    long c = 0;
    std::vector<std::pair<long, long>> bifix_dims; // (b_i, d_i)

    friend bool operator==(const OperatorEquation&, const OperatorEquation&) = default;
};

OperatorEquation operator_equation(const PatternProfile& pr);

using PolynomialList = std::vector<RationalPolynomial>;

struct SequencePair {
    PolynomialList basic;
    PolynomialList sheffer;
};

/// (1 - w - t)(1 + sum t^{b_i} w^{d_i}) + t^a w^c with w = (1 + tau)^{-1}.
/// Zero to the series order exactly when tau solves the equation for E = 1 + tau(B).
TruncSeries operator_residual(const OperatorEquation& eq, const TruncSeries& tau);

/// tau with E = 1 + tau(B), to order N, solved degree by degree in w.
TruncSeries solve_operator_equation(const OperatorEquation& eq, long order);

/// b_n(x) = [t^n] (1 + tau(t))^x for n = 0..order(tau).
PolynomialList basic_sequence(const TruncSeries& tau);

/// The operator series nabla = sum_j T_j B^j, T_j polynomials in E^{-1};
/// entry j holds T_j as a polynomial in q = E^{-1}.
PolynomialList nabla_operator_series(const OperatorEquation& eq, long order);

/// b_n(x) = x sum_i [tau^i]_n (1/x) a_i(x) with a_i(x) = binom(x+i-1, i),
/// the basic sequence of nabla.
RationalPolynomial transfer_formula_basic(const OperatorEquation& eq, long n, long order);

/// t_n(x) = (x - alpha n - gamma) b_n(x - gamma) / (x - gamma); t_0 = 1.
PolynomialList abelize(const PolynomialList& basic, long alpha, long gamma);

/// First n at which nabla b_n(x) != sum coeff * b_{n-drop}(x - shift), if any.
std::optional<long> operator_identity_failure(const PolynomialList& basic, const RecurrenceSpec& spec);

/// First n at which s_n(x) != [t^n] (1 - t beta'(t)) e^{(x+1) beta(t)}, beta = log(1 + tau).
std::optional<long> generating_function_failure(const PolynomialList& sheffer, const TruncSeries& tau);

/// Pattern -> equation -> tau -> basic sequence -> ballot Abelization, with the
/// generating-function identity enforced (throws IdentityViolation).
SequencePair sheffer_from_pattern(const PatternProfile& pr, long order);

/// s_n(m) from the Sheffer polynomials (order max_n + 1).
BallotTable engine_table(const Pattern& pattern, long max_n, long max_m);

} // namespace latticecount::focalc

#endif
