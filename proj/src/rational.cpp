#include "horadam/rational.hpp"

#include <cctype>
#include <ostream>

#include "horadam/error.hpp"

namespace horadam {

namespace {

BigInt from_int64(std::int64_t v) {
    // mpz_class has no long long constructor on every platform.
    static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 expected");
    return BigInt(static_cast<long>(v));
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(from_int64(value)) {}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ParameterError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&](std::size_t col) {
        throw ParseError("malformed rational '" + std::string(text) + "'", 1, col + 1);
    };
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from == to) fail(from);
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail(i);
    };

    std::size_t start = 0;
    if (!text.empty() && text[0] == '-') start = 1;
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        digits(start, text.size());
        return Rational(BigInt(std::string(text)));
    }
    digits(start, slash);
    digits(slash + 1, text.size());
    if (text.find_first_not_of('0', slash + 1) == std::string_view::npos) fail(slash + 1);
    return Rational(BigInt(std::string(text.substr(0, slash))), BigInt(std::string(text.substr(slash + 1))));
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(r));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

Rational rat(const BigInt& num, const BigInt& den) { return Rational(num, den); }

Rational pow(const Rational& base, std::int64_t exponent) {
    if (exponent == 0) return Rational(1);
    if (exponent < 0) {
        if (base.is_zero()) throw DomainError("zero raised to a negative power");
        return pow(base.inverse(), -exponent);
    }
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // Powers of coprime parts stay coprime; the constructor still canonicalizes.
    return Rational(num, den);
}

Rational binom(std::int64_t k, std::int64_t j) {
    if (k < 0) throw DomainError("binom: negative upper index " + std::to_string(k));
    if (j < 0 || j > k) return Rational(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
    return Rational(r);
}

std::size_t decimal_digits(const BigInt& value) {
    BigInt a = abs(value);
    return a == 0 ? 1 : a.get_str().size();
}

}  // namespace horadam
