#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar and integer binomial coefficients.
 *
 * Every value the library touches (p, q, initial terms, G_n) is a Rational.
 * The representation is always canonical:
 *   - denominator > 0, sign carried by the numerator
 *   - gcd(|numerator|, denominator) = 1
 *   - zero is 0/1
 * so two Rationals are equal iff their parts are equal.
 *
 * Text form: "n" when the denominator is 1, otherwise "n/d".
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace horadam {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value);  // NOLINT(google-explicit-constructor)

    /// Throws ParameterError when den == 0.
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "n" or "n/d" (optional leading '-', decimal digits only).
    /// Throws ParseError on anything else and ParameterError on d == 0.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Throws DomainError on zero.
    Rational inverse() const;

    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws DomainError on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Canonical num/den. Throws ParameterError when den == 0.
Rational rat(const BigInt& num, const BigInt& den);

/// base^exponent for any integer exponent; zero to a negative power throws
/// DomainError. 0^0 is 1.
Rational pow(const Rational& base, std::int64_t exponent);

/// (-1)^exponent.
inline Rational sign_power(std::int64_t exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

/// C(k, j); zero outside 0 <= j <= k. Throws DomainError when k < 0.
Rational binom(std::int64_t k, std::int64_t j);

/// Decimal digit count of |value| (value must be an integer).
std::size_t decimal_digits(const BigInt& value);

}  // namespace horadam
