#pragma once

#include "stratavol/rational.hpp"

#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace stratavol::exact {

/// Dense polynomial in the auxiliary variable u with rational coefficients.
/// Trailing zeros are always trimmed.
class UPoly {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    UPoly() = default;
    UPoly(Rational constant);  // NOLINT(google-explicit-constructor)
    UPoly(std::int64_t constant) : UPoly(Rational(constant)) {}  // NOLINT
    explicit UPoly(std::vector<Rational> coefficients);

    /// The monomial u^power.
    static UPoly u(unsigned power = 1);

    int degree() const;
    bool is_zero() const { return coefficients_.empty(); }
    bool is_constant() const { return coefficients_.size() <= 1; }
    /// Zero past the degree.
    Rational coeff(unsigned power) const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    Rational evaluate(const Rational& at) const;
    UPoly times_u() const;

    UPoly& operator+=(const UPoly& rhs);
    UPoly& operator-=(const UPoly& rhs);
    UPoly& operator*=(const Rational& scalar);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
    friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
    friend UPoly operator-(UPoly a) { return a *= Rational(-1); }
    friend bool operator==(const UPoly&, const UPoly&) = default;

    std::string str() const;

private:
    void trim();

    std::vector<Rational> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const UPoly& p);

/// Formal power series in t truncated at t^order (inclusive), with UPoly
/// coefficients. Binary operations truncate to the smaller operand order.
class TruncatedSeries {
public:
    /// Zero series. Throws std::invalid_argument for order < 0.
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<UPoly> coefficients);

    static TruncatedSeries constant(int order, const UPoly& value);
    /// The series t.
    static TruncatedSeries variable(int order);

    int order() const { return order_; }
    /// Zero past the truncation order.
    const UPoly& coeff(int power) const;
    void set_coeff(int power, UPoly value);
    const std::vector<UPoly>& coefficients() const { return coefficients_; }

    /// True when every coefficient is a constant polynomial in u.
    bool is_u_free() const;

    TruncatedSeries truncated(int order) const;
    /// Multiplies by t; order grows by one.
    TruncatedSeries shifted_up() const;
    /// Divides by t; requires a zero constant term, order drops by one.
    TruncatedSeries shifted_down() const;
    /// Multiplicative inverse; requires a nonzero rational constant term.
    TruncatedSeries reciprocal() const;
    TruncatedSeries power(unsigned exponent) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const UPoly& scalar);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const UPoly& s) { return a *= s; }
    friend TruncatedSeries operator*(const UPoly& s, TruncatedSeries a) { return a *= s; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    std::string str() const;

private:
    int order_;
    std::vector<UPoly> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

/// exp(f); requires f(0) == 0.
TruncatedSeries series_exp(const TruncatedSeries& f);
/// log(f); requires f(0) == 1.
TruncatedSeries series_log(const TruncatedSeries& f);
/// f^u = exp(u log f); requires f(0) == 1 and f free of u.
TruncatedSeries series_pow_u(const TruncatedSeries& f);
/// (t/2) / sin(t/2).
TruncatedSeries sine_quotient(int order);
/// f(g(t)); requires g(0) == 0. Result order is min(f.order, g.order).
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);
/// Compositional inverse r of q, i.e. q(r(t)) = t; requires q = t + O(t^2).
TruncatedSeries lagrange_invert(const TruncatedSeries& q);

}  // namespace stratavol::exact
