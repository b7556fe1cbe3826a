#include "hgcauchy/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace hgc {

namespace {

bool is_integer_literal(std::string_view text) {
    if (text.empty())
        return false;
    std::size_t i = (text.front() == '-') ? 1 : 0;
    if (i == text.size())
        return false;
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            return false;
    return true;
}

}  // namespace

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

ExactRational::ExactRational(std::int64_t value) : value_(Integer(static_cast<long>(value))) {}

ExactRational::ExactRational(std::int64_t numerator, std::int64_t denominator)
    : ExactRational(Integer(static_cast<long>(numerator)), Integer(static_cast<long>(denominator))) {}

ExactRational::ExactRational(const Integer& value) : value_(value) {}

ExactRational::ExactRational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0)
        throw std::invalid_argument("ExactRational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    const Integer num{std::string(num_text)};
    if (slash == std::string_view::npos)
        return ExactRational(num);
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text.front() == '-')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer den{std::string(den_text)};
    if (den == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return ExactRational(num, den);
}

ExactRational ExactRational::reciprocal() const {
    if (is_zero())
        throw std::domain_error("ExactRational: reciprocal of zero");
    return ExactRational(mpq_class(1) / value_);
}

ExactRational ExactRational::pow(unsigned exponent) const {
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    // Powers of coprime integers stay coprime.
    ExactRational out;
    out.value_ = mpq_class(num, den);
    return out;
}

std::string ExactRational::to_string() const { return value_.get_str(10); }

ExactRational ExactRational::operator-() const {
    ExactRational out;
    out.value_ = -value_;
    return out;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero())
        throw std::domain_error("ExactRational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& value) { return os << value.to_string(); }

}  // namespace hgc
