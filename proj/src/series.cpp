#include "stratavol/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stratavol::exact {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(Rational constant) {
    if (!constant.is_zero()) coefficients_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

UPoly UPoly::u(unsigned power) {
    std::vector<Rational> c(power + 1, Rational(0));
    c[power] = 1;
    return UPoly(std::move(c));
}

int UPoly::degree() const {
    return coefficients_.empty() ? kZeroDegree : static_cast<int>(coefficients_.size()) - 1;
}

Rational UPoly::coeff(unsigned power) const {
    return power < coefficients_.size() ? coefficients_[power] : Rational(0);
}

Rational UPoly::evaluate(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

UPoly UPoly::times_u() const {
    if (is_zero()) return {};
    std::vector<Rational> c;
    c.reserve(coefficients_.size() + 1);
    c.emplace_back(0);
    c.insert(c.end(), coefficients_.begin(), coefficients_.end());
    return UPoly(std::move(c));
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
    if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
    if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] -= rhs.coefficients_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    for (auto& c : coefficients_) c *= scalar;
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coefficients_.size() + b.coefficients_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        if (a.coefficients_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            c[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return UPoly(std::move(c));
}

void UPoly::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coefficients_[i];
        if (i == 1) os << "*u";
        if (i > 1) os << "*u^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.str(); }

// ------------------------------------------------------- TruncatedSeries

namespace {

const UPoly& zero_poly() {
    static const UPoly zero;
    return zero;
}

void require_constant_term(const TruncatedSeries& f, const UPoly& expected, const char* what) {
    if (f.coeff(0) != expected) {
        throw std::domain_error(std::string(what) + ": constant term must be " + expected.str() +
                                ", got " + f.coeff(0).str());
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    coefficients_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<UPoly> coefficients) : TruncatedSeries(order) {
    if (coefficients.size() > coefficients_.size()) coefficients.resize(coefficients_.size());
    std::move(coefficients.begin(), coefficients.end(), coefficients_.begin());
}

TruncatedSeries TruncatedSeries::constant(int order, const UPoly& value) {
    TruncatedSeries s(order);
    s.coefficients_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::variable(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coefficients_[1] = UPoly(1);
    return s;
}

const UPoly& TruncatedSeries::coeff(int power) const {
    if (power < 0 || power > order_) return zero_poly();
    return coefficients_[static_cast<std::size_t>(power)];
}

void TruncatedSeries::set_coeff(int power, UPoly value) {
    if (power < 0 || power > order_) {
        throw std::out_of_range("TruncatedSeries::set_coeff: power " + std::to_string(power) +
                                " outside [0, " + std::to_string(order_) + "]");
    }
    coefficients_[static_cast<std::size_t>(power)] = std::move(value);
}

bool TruncatedSeries::is_u_free() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](const UPoly& p) { return p.is_constant(); });
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    TruncatedSeries out(std::min(order, order_));
    for (int i = 0; i <= out.order_; ++i) out.coefficients_[i] = coefficients_[i];
    return out;
}

TruncatedSeries TruncatedSeries::shifted_up() const {
    TruncatedSeries out(order_ + 1);
    for (int i = 0; i <= order_; ++i) out.coefficients_[i + 1] = coefficients_[i];
    return out;
}

TruncatedSeries TruncatedSeries::shifted_down() const {
    if (!coefficients_[0].is_zero()) throw std::domain_error("TruncatedSeries::shifted_down: nonzero constant term");
    if (order_ == 0) throw std::domain_error("TruncatedSeries::shifted_down: order 0 series");
    TruncatedSeries out(order_ - 1);
    for (int i = 1; i <= order_; ++i) out.coefficients_[i - 1] = coefficients_[i];
    return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    const UPoly& c0 = coefficients_[0];
    if (c0.is_zero() || !c0.is_constant()) {
        throw std::domain_error("TruncatedSeries::reciprocal: constant term must be a nonzero rational");
    }
    const Rational inv0 = Rational(1) / c0.coeff(0);
    TruncatedSeries out(order_);
    out.coefficients_[0] = UPoly(inv0);
    for (int n = 1; n <= order_; ++n) {
        UPoly acc;
        for (int k = 1; k <= n; ++k) acc += coefficients_[k] * out.coefficients_[n - k];
        out.coefficients_[n] = -(acc * inv0);
    }
    return out;
}

TruncatedSeries TruncatedSeries::power(unsigned exponent) const {
    TruncatedSeries result = constant(order_, UPoly(1));
    TruncatedSeries base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent != 0) base = base * base;
    }
    return result;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    if (rhs.order_ < order_) *this = truncated(rhs.order_);
    for (int i = 0; i <= order_; ++i) coefficients_[i] += rhs.coefficients_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    if (rhs.order_ < order_) *this = truncated(rhs.order_);
    for (int i = 0; i <= order_; ++i) coefficients_[i] -= rhs.coefficients_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const UPoly& scalar) {
    for (auto& c : coefficients_) c = c * scalar;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order_, b.order_);
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coefficients_[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.coefficients_[j].is_zero()) continue;
            out.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return out;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= order_; ++i) {
        if (coefficients_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coefficients_[i] << ")";
        if (i == 1) os << "*t";
        if (i > 1) os << "*t^" << i;
    }
    if (first) os << "0";
    os << " + O(t^" << order_ + 1 << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << s.str(); }

// ------------------------------------------------------------ functions

TruncatedSeries series_exp(const TruncatedSeries& f) {
    require_constant_term(f, UPoly(), "series_exp");
    // g = exp(f) satisfies g' = f' g, i.e. n g_n = sum_k k f_k g_{n-k}.
    const int order = f.order();
    TruncatedSeries g(order);
    g.set_coeff(0, UPoly(1));
    for (int n = 1; n <= order; ++n) {
        UPoly acc;
        for (int k = 1; k <= n; ++k) {
            if (f.coeff(k).is_zero()) continue;
            acc += f.coeff(k) * g.coeff(n - k) * Rational(k);
        }
        g.set_coeff(n, acc * Rational(1, n));
    }
    return g;
}

TruncatedSeries series_log(const TruncatedSeries& f) {
    require_constant_term(f, UPoly(1), "series_log");
    // h = log(f) satisfies f h' = f', i.e. n h_n = n f_n - sum_{k<n} k h_k f_{n-k}.
    const int order = f.order();
    TruncatedSeries h(order);
    for (int n = 1; n <= order; ++n) {
        UPoly acc = f.coeff(n) * Rational(n);
        for (int k = 1; k < n; ++k) {
            if (h.coeff(k).is_zero()) continue;
            acc -= h.coeff(k) * f.coeff(n - k) * Rational(k);
        }
        h.set_coeff(n, acc * Rational(1, n));
    }
    return h;
}

TruncatedSeries series_pow_u(const TruncatedSeries& f) {
    require_constant_term(f, UPoly(1), "series_pow_u");
    if (!f.is_u_free()) throw std::domain_error("series_pow_u: coefficients must not depend on u");
    TruncatedSeries logf = series_log(f);
    TruncatedSeries scaled(logf.order());
    for (int i = 0; i <= logf.order(); ++i) scaled.set_coeff(i, logf.coeff(i).times_u());
    return series_exp(scaled);
}

TruncatedSeries sine_quotient(int order) {
    // sin(x)/x = sum_k (-1)^k x^{2k} / (2k+1)!  at x = t/2.
    TruncatedSeries sinc(order);
    for (int k = 0; 2 * k <= order; ++k) {
        Rational c(Integer(1), factorial(2 * k + 1) * (Integer(1) << (2 * k)));
        if (k % 2 == 1) c = -c;
        sinc.set_coeff(2 * k, UPoly(c));
    }
    return sinc.reciprocal();
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (!g.coeff(0).is_zero()) throw std::domain_error("compose: inner series must have zero constant term");
    const int order = std::min(f.order(), g.order());
    const TruncatedSeries inner = g.truncated(order);
    // Horner: f_0 + g (f_1 + g (f_2 + ...)).
    TruncatedSeries acc(order);
    for (int i = order; i >= 0; --i) {
        acc = acc * inner;
        acc += TruncatedSeries::constant(order, f.coeff(i));
    }
    return acc;
}

TruncatedSeries lagrange_invert(const TruncatedSeries& q) {
    if (!q.coeff(0).is_zero() || q.coeff(1) != UPoly(1)) {
        throw std::domain_error("lagrange_invert: series must be t + O(t^2)");
    }
    const int order = q.order();
    TruncatedSeries r(order);
    if (order == 0) return r;
    // q = t psi(t) with psi(0) = 1; r = t phi(r) for phi = 1/psi, so
    // [t^n] r = (1/n) [w^{n-1}] phi(w)^n.
    const TruncatedSeries phi = q.shifted_down().reciprocal();
    TruncatedSeries phi_pow = TruncatedSeries::constant(phi.order(), UPoly(1));
    for (int n = 1; n <= order; ++n) {
        phi_pow = phi_pow * phi;
        r.set_coeff(n, phi_pow.coeff(n - 1) * Rational(1, n));
    }
    return r;
}

}  // namespace stratavol::exact
