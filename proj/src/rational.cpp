#include "stratavol/rational.hpp"

#include <stdexcept>

namespace stratavol::exact {

Rational::Rational(std::int64_t value) {
    // mpz_class has no portable int64 constructor on every platform.
    value_ = mpq_class(mpz_class(std::to_string(value)));
}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(Integer(std::to_string(numerator)), Integer(std::to_string(denominator))) {}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view digits) {
        std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
        if (digits.size() <= start) {
            throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
        }
        for (std::size_t i = start; i < digits.size(); ++i) {
            if (digits[i] < '0' || digits[i] > '9') {
                throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
            }
        }
        std::string s(digits);
        if (s[0] == '+') s.erase(0, 1);
        return Integer(s);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("Rational::parse: zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
}

Integer Rational::to_integer() const {
    if (!is_integer()) {
        throw std::domain_error("Rational::to_integer: " + str() + " is not an integer");
    }
    return value_.get_num();
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

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
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer falling_factorial(std::int64_t x, unsigned k) {
    Integer out = 1;
    for (unsigned i = 0; i < k; ++i) out *= Integer(std::to_string(x - static_cast<std::int64_t>(i)));
    return out;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational out = 1;
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

}  // namespace stratavol::exact
