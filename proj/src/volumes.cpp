#include "stratavol/volumes.hpp"

#include "stratavol/pnum.hpp"
#include "stratavol/special.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

namespace stratavol::volumes {

using exact::bernoulli;
using exact::factorial;
using exact::UPoly;
using exact::zeta_even;

namespace {

void check_range(int g, int n) {
    if (n < 1 || n > g) {
        throw std::invalid_argument("need 1 <= n <= g, got g=" + std::to_string(g) + ", n=" + std::to_string(n));
    }
}

void check_even_order(int order) {
    if (order < 0 || order % 2 != 0) throw std::invalid_argument("series order must be even and non-negative");
}

// Partitions of g into exactly n positive parts, each with its number of
// distinct orderings.
std::vector<std::pair<std::vector<int>, Integer>> weighted_partitions(int g, int n) {
    std::vector<std::pair<std::vector<int>, Integer>> out;
    for (auto& parts : pnum::partitions(g, 1)) {
        if (static_cast<int>(parts.size()) != n) continue;
        Integer mult = factorial(n);
        for (std::size_t i = 0; i < parts.size();) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            mult /= factorial(static_cast<unsigned>(j - i));
            i = j;
        }
        out.emplace_back(std::move(parts), mult);
    }
    return out;
}

std::vector<int> doubled(const std::vector<int>& s) {
    std::vector<int> out;
    for (int x : s) out.push_back(2 * x);
    return out;
}

Rational compute_a_gn(int g, int n) {
    Rational sum = 0;
    for (const auto& [s, mult] : weighted_partitions(g, n)) {
        Rational term = Rational(mult) * Rational(pnum::p_value(doubled(s)));
        for (int si : s) {
            Rational f = bernoulli(2 * si) / Rational(Integer(2 * si * factorial(2 * si)));
            if (si % 2 == 0) f = -f;
            term *= f;
        }
        sum += term;
    }
    return sum / Rational(factorial(n));
}

}  // namespace

VolumeTable& VolumeTable::shared() {
    static VolumeTable table;
    return table;
}

Rational VolumeTable::value(int g, int n) {
    check_range(g, n);
    {
        std::shared_lock lock(mutex_);
        if (auto it = entries_.find({g, n}); it != entries_.end()) return it->second;
    }
    const Rational v = compute_a_gn(g, n);
    if (v.sign() <= 0) throw std::logic_error("a_{g,n} evaluated to a non-positive value " + v.str());
    std::unique_lock lock(mutex_);
    entries_.emplace(std::make_pair(g, n), v);
    return v;
}

std::map<std::pair<int, int>, Rational> VolumeTable::snapshot() const {
    std::shared_lock lock(mutex_);
    return entries_;
}

Rational a_gn(int g, int n) { return VolumeTable::shared().value(g, n); }

PiScaled vol_n_zeta_form(int g, int n) {
    check_range(g, n);
    PiScaled sum = PiScaled::zero(2 * g);
    for (const auto& [s, mult] : weighted_partitions(g, n)) {
        PiScaled term(Rational(mult) * Rational(pnum::p_value(doubled(s))), 0);
        for (int si : s) term = term * (Rational(1, si) * zeta_even(static_cast<unsigned>(si)));
        sum += term;
    }
    return Rational(2) / Rational(Integer(factorial(2 * g - 1) * factorial(n))) * sum;
}

PiScaled vol_n(int g, int n) {
    check_range(g, n);
    const Rational scale = Rational(Integer(Integer(2) << (2 * g))) / Rational(factorial(2 * g - 1));
    const PiScaled v(scale * a_gn(g, n), 2 * g);
    if (v != vol_n_zeta_form(g, n)) {
        throw std::logic_error("zeta and Bernoulli forms disagree at g=" + std::to_string(g) + ", n=" + std::to_string(n));
    }
    return v;
}

PiScaled total_volume(int g) {
    if (g < 1) throw std::invalid_argument("total_volume: g must be positive");
    PiScaled sum = PiScaled::zero(2 * g);
    for (int n = 1; n <= g; ++n) sum += vol_n(g, n);
    return sum;
}

TruncatedSeries c_series(int order) {
    check_even_order(order);
    TruncatedSeries c = TruncatedSeries::constant(order, UPoly(1));
    for (int g = 1; 2 * g <= order; ++g) {
        std::vector<Rational> coeffs(g + 1, Rational(0));
        for (int n = 1; n <= g; ++n) coeffs[n] = Rational(2 * g - 1) * a_gn(g, n);
        c.set_coeff(2 * g, UPoly(std::move(coeffs)));
    }
    return c;
}

TruncatedSeries c_series_inverse_route(int order) {
    check_even_order(order);
    const int inner = order + 1;
    const TruncatedSeries b = exact::series_pow_u(exact::sine_quotient(inner));
    TruncatedSeries exponent(inner);
    for (int k = 1; k <= inner; ++k) exponent.set_coeff(k, b.coeff(k) * Rational(factorial(k - 1)));
    const TruncatedSeries q = exact::series_exp(exponent).shifted_up().truncated(inner);
    const TruncatedSeries r = exact::lagrange_invert(q);
    return r.shifted_down().reciprocal().truncated(order);
}

bool verify_bivariate_relation(int g_max) {
    if (g_max < 0) throw std::invalid_argument("verify_bivariate_relation: g_max must be non-negative");
    const int order = 2 * g_max;
    const TruncatedSeries c = c_series(order);
    const TruncatedSeries rhs = exact::series_pow_u(exact::sine_quotient(order));
    TruncatedSeries c_power = TruncatedSeries::constant(order, UPoly(1));
    for (int g = 0; g <= g_max; ++g) {
        if (g > 0) c_power = c_power * c * c;
        const UPoly lhs = c_power.coeff(2 * g) * (Rational(1) / Rational(factorial(2 * g)));
        if (lhs != rhs.coeff(2 * g)) return false;
    }
    return true;
}

Integer cylinder_partial_sum(const std::vector<int>& s, int N) {
    if (s.empty()) throw std::invalid_argument("cylinder_partial_sum: empty exponent tuple");
    for (int x : s) {
        if (x < 1) throw std::invalid_argument("cylinder_partial_sum: exponents must be positive");
    }
    if (N < 1) throw std::invalid_argument("cylinder_partial_sum: N must be positive");

    // sigma[m] = sum over h L = m of L^e, one sieve per exponent.
    auto divisor_power_sums = [N](int e) {
        std::vector<Integer> sigma(N + 1, Integer(0));
        Integer power;
        for (int L = 1; L <= N; ++L) {
            mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(L), static_cast<unsigned long>(e));
            for (int m = L; m <= N; m += L) sigma[m] += power;
        }
        return sigma;
    };

    // F[M] = sum over m_j + ... + m_n <= M of prod sigma(m_i); built from the last factor back.
    std::vector<Integer> F(N + 1, Integer(0));
    {
        const auto sigma = divisor_power_sums(s.back());
        for (int M = 1; M <= N; ++M) F[M] = F[M - 1] + sigma[M];
    }
    for (std::size_t j = s.size() - 1; j-- > 0;) {
        const auto sigma = divisor_power_sums(s[j]);
        std::vector<Integer> next(N + 1, Integer(0));
        for (int M = 1; M <= N; ++M) {
            for (int m = 1; m < M; ++m) {
                if (F[M - m] != 0) next[M] += sigma[m] * F[M - m];
            }
        }
        F = std::move(next);
    }
    return F[N];
}

double asymptotic_prediction(const std::vector<int>& s, int N) {
    if (s.empty()) throw std::invalid_argument("asymptotic_prediction: empty exponent tuple");
    if (N < 1) throw std::invalid_argument("asymptotic_prediction: N must be positive");
    int total = 0;
    double log_value = 0.0;
    for (int si : s) {
        if (si < 1) throw std::invalid_argument("asymptotic_prediction: exponents must be positive");
        total += si;
        log_value += std::lgamma(si + 1.0) + std::log(exact::zeta_float(static_cast<unsigned>(si + 1)));
    }
    const int degree = total + static_cast<int>(s.size());
    log_value += degree * std::log(static_cast<double>(N)) - std::lgamma(degree + 1.0);
    return std::exp(log_value);
}

}  // namespace stratavol::volumes
