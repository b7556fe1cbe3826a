#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hgc {

using Integer = mpz_class;

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator. Immutable from the outside; every operation returns a
/// canonical value.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    ExactRational(std::int64_t numerator, std::int64_t denominator);
    explicit ExactRational(const Integer& value);
    ExactRational(const Integer& numerator, const Integer& denominator);

    /// Parses "p/q", "p", "-p/q". Throws std::invalid_argument on malformed
    /// input or a zero denominator.
    static ExactRational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    ExactRational reciprocal() const;
    ExactRational pow(unsigned exponent) const;

    /// "p/q", or "p" when q = 1.
    std::string to_string() const;

    ExactRational operator-() const;
    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }

    friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit ExactRational(mpq_class value);

    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

/// (-1)^k as a rational.
inline ExactRational sign_power(unsigned k) { return (k % 2 == 0) ? ExactRational(1) : ExactRational(-1); }

}  // namespace hgc
