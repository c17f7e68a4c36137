#include "latticecount/series.hpp"

#include <string>

#include "latticecount/error.hpp"

namespace latticecount {

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order())
        throw Error(ErrorCode::InvalidArgument, "series orders differ: " + std::to_string(a.order()) +
                                                    " vs " + std::to_string(b.order()));
}

} // namespace

TruncSeries::TruncSeries(long order) {
    if (order < 0)
        throw Error(ErrorCode::InvalidArgument, "series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order + 1), Rational(0));
}

TruncSeries::TruncSeries(long order, std::vector<Rational> coeffs) : TruncSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k)
        coeffs_[k] = std::move(coeffs[k]);
}

TruncSeries TruncSeries::one(long order) { return monomial(order, 0); }

TruncSeries TruncSeries::monomial(long order, long power, const Rational& c) {
    TruncSeries s(order);
    if (power >= 0 && power <= order)
        s[power] = c;
    return s;
}

bool TruncSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& k) {
    for (auto& c : coeffs_)
        c *= k;
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    const long order = a.order();
    TruncSeries out(order);
    for (long i = 0; i <= order; ++i) {
        if (a[i] == 0)
            continue;
        for (long j = 0; i + j <= order; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

TruncSeries TruncSeries::pow(long k) const {
    if (k < 0)
        return series_inverse(*this).pow(-k);
    TruncSeries out = one(order());
    for (long i = 0; i < k; ++i)
        out = out * *this;
    return out;
}

TruncSeries TruncSeries::derivative() const {
    TruncSeries out(order());
    for (long k = 1; k <= order(); ++k)
        out[k - 1] = (*this)[k] * k;
    return out;
}

TruncSeries series_inverse(const TruncSeries& s) {
    if (s[0] == 0)
        throw Error(ErrorCode::NotInvertible, "series has zero constant term");
    const long order = s.order();
    TruncSeries out(order);
    const Rational inv0 = 1 / s[0];
    out[0] = inv0;
    for (long n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (long k = 1; k <= n; ++k)
            acc += s[k] * out[n - k];
        out[n] = -acc * inv0;
    }
    return out;
}

TruncSeries series_log(const TruncSeries& s) {
    if (s[0] != 1)
        throw Error(ErrorCode::BadConstantTerm, "logarithm needs constant term 1");
    const TruncSeries ratio = s.derivative() * series_inverse(s);
    TruncSeries out(s.order());
    for (long k = 1; k <= s.order(); ++k)
        out[k] = ratio[k - 1] / k;
    return out;
}

TruncSeries series_exp(const TruncSeries& s) {
    if (s[0] != 0)
        throw Error(ErrorCode::BadConstantTerm, "exponential needs constant term 0");
    // E' = s' E
    const long order = s.order();
    TruncSeries out(order);
    out[0] = 1;
    for (long n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (long k = 1; k <= n; ++k)
            acc += s[k] * k * out[n - k];
        out[n] = acc / n;
    }
    return out;
}

} // namespace latticecount
