#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace fibdens {

using BigInt = mpz_class;

/// Exact fraction of arbitrary-precision integers, always held in reduced
/// form with a positive denominator. Two values are equal iff their
/// canonical forms are identical.
class Rational {
public:
    Rational() = default;
    Rational(const BigInt& num);                         // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num);                          // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);      // throws std::domain_error on den == 0

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    double to_double() const { return value_.get_d(); }
    /// "p/q", including "0/1" and "1/1".
    std::string to_string() const;
    /// Inverse of to_string; accepts "p/q" or a bare integer.
    static Rational parse(const std::string& text);

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);           // throws std::domain_error on zero divisor

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

/// Convenience constructor mirroring `Rational(num, den)`.
Rational rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& value);

}  // namespace fibdens
