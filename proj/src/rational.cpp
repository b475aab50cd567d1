#include "fibdens/rational.hpp"

#include <stdexcept>

namespace fibdens {

Rational::Rational(const BigInt& num) : value_(num) {}

Rational::Rational(std::int64_t num) : value_(static_cast<long>(num)) {}

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (sgn(den) == 0) {
        throw std::domain_error("rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text, 10));
        }
        return Rational(BigInt(text.substr(0, slash), 10), BigInt(text.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
}

std::string Rational::to_string() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational out;
    out.value_ = -value_;
    return out;
}

Rational rational(const BigInt& num, const BigInt& den)
{
    return Rational(num, den);
}

std::string to_string(const BigInt& value)
{
    return value.get_str();
}

}  // namespace fibdens
