#include "latticecount/polynomial.hpp"

#include "latticecount/error.hpp"

namespace latticecount {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::x() { return RationalPolynomial({Rational(0), Rational(1)}); }

RationalPolynomial RationalPolynomial::linear_root(const Rational& root) {
    return RationalPolynomial({Rational(-root), Rational(1)});
}

void RationalPolynomial::trim() {
    for (auto& c : coeffs_)
        c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational RationalPolynomial::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::shifted(const Rational& s) const {
    // Horner in the basis (x + s)^k.
    std::vector<Rational> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (std::size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] += acc[k];
            next[k] += acc[k] * s;
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return RationalPolynomial(std::move(acc));
}

RationalPolynomial RationalPolynomial::divided_by_x() const {
    if (is_zero())
        return {};
    if (coeffs_.front() != 0)
        throw Error(ErrorCode::NotBasic, "polynomial " + str() + " does not vanish at 0");
    return RationalPolynomial(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& k) {
    for (auto& c : coeffs_)
        c *= k;
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out));
}

std::vector<std::string> RationalPolynomial::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(to_string(c));
    if (out.empty())
        out.emplace_back("0");
    return out;
}

RationalPolynomial RationalPolynomial::from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (const auto& s : coeffs)
        out.push_back(parse_rational(s));
    return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::str() const {
    std::string out = "[";
    const auto parts = to_strings();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ", ";
        out += parts[i];
    }
    return out + "]";
}

RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    const std::size_t n = points.size();
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i)
        dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rational span = points[i].first - points[i - level].first;
            if (span == 0)
                throw Error(ErrorCode::InvalidArgument, "interpolation abscissae must be distinct");
            dd[i] = (dd[i] - dd[i - 1]) / span;
        }
    }
    // Newton form evaluated from the innermost bracket outwards.
    RationalPolynomial acc;
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * RationalPolynomial::linear_root(points[i].first);
        acc += RationalPolynomial::constant(dd[i]);
    }
    return acc;
}

} // namespace latticecount
