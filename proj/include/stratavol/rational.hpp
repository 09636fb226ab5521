#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace stratavol::exact {

using Integer = mpz_class;

/// Exact fraction kept in lowest terms with a positive denominator.
///
/// Backed by GMP's mpq; every constructor canonicalizes and every GMP
/// arithmetic routine preserves canonical form, so no operation ever
/// leaves a non-reduced value behind.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(const Integer& value);  // NOLINT(google-explicit-constructor)
    Rational(const Integer& numerator, const Integer& denominator);
    Rational(std::int64_t numerator, std::int64_t denominator);

    /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
    /// or a zero denominator.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Throws std::domain_error unless the value is integral.
    Integer to_integer() const;
    double to_double() const { return value_.get_d(); }

    /// "p/q", or "p" when q == 1.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
/// x (x-1) ... (x-k+1); equals 1 for k == 0.
Integer falling_factorial(std::int64_t x, unsigned k);
Rational pow(const Rational& base, unsigned exponent);

}  // namespace stratavol::exact
