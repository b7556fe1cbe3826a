#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "hgcauchy/errors.hpp"
#include "hgcauchy/rational.hpp"

namespace hgc {

/// Formal power series truncated at an explicit inclusive order.
///
/// Binary operations combine operands of different orders by truncating to
/// the smaller one, so a result never claims precision it does not have.
class TruncatedSeries {
public:
    /// Coefficients 0..order; must be non-empty.
    explicit TruncatedSeries(std::vector<ExactRational> coefficients);
    TruncatedSeries(std::initializer_list<ExactRational> coefficients);

    static TruncatedSeries zero(unsigned order);
    static TruncatedSeries one(unsigned order);

    unsigned order() const { return static_cast<unsigned>(coefficients_.size() - 1); }
    const ExactRational& operator[](unsigned k) const { return coefficients_[k]; }
    std::span<const ExactRational> coefficients() const { return coefficients_; }

    TruncatedSeries truncated(unsigned order) const;
    bool is_unit() const;  // exactly 1 + 0x + ... + 0x^order

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<ExactRational> coefficients_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const ExactRational& scalar, const TruncatedSeries& a);

/// Cauchy product, result order min(order(a), order(b)).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

/// a^exponent by repeated multiplication; a^0 is the unit series.
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned exponent);

/// Multiplicative inverse. Throws ZeroConstantTerm when a_0 = 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

/// log(1 + x) = x - x^2/2 + x^3/3 - ...
TruncatedSeries log1p_series(unsigned order);

/// Hasse-Teichmueller derivative: x^m -> binomial(m, n) x^(m-n).
/// Result order is order(a) - n; throws OrderExceeded when n > order(a).
TruncatedSeries ht_derivative(const TruncatedSeries& a, unsigned n);

/// Sequence transform z = A x with 1 + sum z_n t^n = (1 - sum x_n t^n)^(-1).
/// x[0] holds x_1; the result has the same length.
std::vector<ExactRational> cameron_transform(std::span<const ExactRational> x);

/// Inverse of cameron_transform: recovers x from z.
std::vector<ExactRational> cameron_inverse(std::span<const ExactRational> z);

}  // namespace hgc
