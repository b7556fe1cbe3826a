#include "hgcauchy/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "hgcauchy/combinatorics.hpp"

namespace hgc {

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty())
        throw std::invalid_argument("TruncatedSeries needs at least the constant coefficient");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<ExactRational> coefficients)
    : TruncatedSeries(std::vector<ExactRational>(coefficients)) {}

TruncatedSeries TruncatedSeries::zero(unsigned order) {
    return TruncatedSeries(std::vector<ExactRational>(order + 1));
}

TruncatedSeries TruncatedSeries::one(unsigned order) {
    std::vector<ExactRational> c(order + 1);
    c[0] = 1;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
    const unsigned keep = std::min(order, this->order());
    return TruncatedSeries(std::vector<ExactRational>(coefficients_.begin(), coefficients_.begin() + keep + 1));
}

bool TruncatedSeries::is_unit() const {
    if (coefficients_[0] != ExactRational(1))
        return false;
    return std::all_of(coefficients_.begin() + 1, coefficients_.end(), [](const auto& c) { return c.is_zero(); });
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const unsigned order = std::min(a.order(), b.order());
    std::vector<ExactRational> c(order + 1);
    for (unsigned k = 0; k <= order; ++k)
        c[k] = a[k] + b[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const unsigned order = std::min(a.order(), b.order());
    std::vector<ExactRational> c(order + 1);
    for (unsigned k = 0; k <= order; ++k)
        c[k] = a[k] - b[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const ExactRational& scalar, const TruncatedSeries& a) {
    std::vector<ExactRational> c(a.coefficients().begin(), a.coefficients().end());
    for (auto& v : c)
        v *= scalar;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const unsigned order = std::min(a.order(), b.order());
    std::vector<ExactRational> c(order + 1);
    for (unsigned i = 0; i <= order; ++i) {
        if (a[i].is_zero())
            continue;
        for (unsigned j = 0; i + j <= order; ++j)
            c[i + j] += a[i] * b[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned exponent) {
    TruncatedSeries out = TruncatedSeries::one(a.order());
    for (unsigned i = 0; i < exponent; ++i)
        out = series_mul(out, a);
    return out;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
    if (a[0].is_zero())
        throw ZeroConstantTerm();
    const unsigned order = a.order();
    const ExactRational inv0 = a[0].reciprocal();
    std::vector<ExactRational> c(order + 1);
    c[0] = inv0;
    for (unsigned k = 1; k <= order; ++k) {
        ExactRational acc;
        for (unsigned j = 1; j <= k; ++j)
            acc += a[j] * c[k - j];
        c[k] = -acc * inv0;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries log1p_series(unsigned order) {
    std::vector<ExactRational> c(order + 1);
    for (unsigned k = 1; k <= order; ++k)
        c[k] = ExactRational(k % 2 == 1 ? 1 : -1, static_cast<std::int64_t>(k));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries ht_derivative(const TruncatedSeries& a, unsigned n) {
    if (n > a.order())
        throw OrderExceeded(n, a.order());
    std::vector<ExactRational> c(a.order() - n + 1);
    for (unsigned m = n; m <= a.order(); ++m)
        c[m - n] = a[m] * ExactRational(binomial(m, n));
    return TruncatedSeries(std::move(c));
}

std::vector<ExactRational> cameron_transform(std::span<const ExactRational> x) {
    const auto order = static_cast<unsigned>(x.size());
    std::vector<ExactRational> base(order + 1);
    base[0] = 1;
    for (unsigned n = 1; n <= order; ++n)
        base[n] = -x[n - 1];
    const TruncatedSeries inv = series_reciprocal(TruncatedSeries(std::move(base)));
    return {inv.coefficients().begin() + 1, inv.coefficients().end()};
}

std::vector<ExactRational> cameron_inverse(std::span<const ExactRational> z) {
    // 1 - sum x t^n = (1 + sum z t^n)^(-1); the forward transform of -z
    // yields w with 1 + sum w t^n equal to that reciprocal, so x = -w.
    std::vector<ExactRational> neg(z.begin(), z.end());
    for (auto& v : neg)
        v = -v;
    auto w = cameron_transform(neg);
    for (auto& v : w)
        v = -v;
    return w;
}

}  // namespace hgc
