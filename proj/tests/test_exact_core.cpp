#include "doctest.h"

#include "stratavol/pi_scaled.hpp"
#include "stratavol/rational.hpp"
#include "stratavol/series.hpp"
#include "stratavol/special.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace stratavol::exact;

namespace {

// Akiyama-Tanigawa: an independent route to B_m (it yields B_1 = +1/2).
Rational bernoulli_akiyama_tanigawa(unsigned m) {
    std::vector<Rational> a(m + 1, Rational(0));
    for (unsigned k = 0; k <= m; ++k) {
        a[k] = Rational(1, static_cast<std::int64_t>(k) + 1);
        for (unsigned j = k; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    }
    return a[0];
}

TruncatedSeries random_series(std::mt19937_64& rng, int order, bool with_u, bool zero_constant) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    TruncatedSeries s(order);
    for (int i = zero_constant ? 1 : 0; i <= order; ++i) {
        std::vector<Rational> c;
        const int deg = with_u ? 2 : 0;
        for (int d = 0; d <= deg; ++d) c.emplace_back(num(rng), den(rng));
        s.set_coeff(i, UPoly(c));
    }
    return s;
}

}  // namespace

TEST_CASE("rational normalizes and round-trips through strings") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational::parse("10/-4") == Rational(-5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 2).to_integer(), std::domain_error);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(12) == bernoulli_akiyama_tanigawa(12));
    CHECK(bernoulli(13).is_zero());

    SUBCASE("defining recurrence holds for 1 <= m <= 20") {
        for (unsigned m = 1; m <= 20; ++m) {
            Rational acc = 0;
            for (unsigned k = 0; k <= m; ++k) acc += Rational(binomial(m + 1, k)) * bernoulli(k);
            CHECK(acc.is_zero());
        }
    }
    SUBCASE("agrees with Akiyama-Tanigawa on even indices") {
        for (unsigned m = 2; m <= 30; m += 2) CHECK(bernoulli(m) == bernoulli_akiyama_tanigawa(m));
    }
}

TEST_CASE("even zeta values") {
    CHECK(zeta_even(1) == PiScaled(Rational(1, 6), 2));
    CHECK(zeta_even(2) == PiScaled(Rational(1, 90), 4));
    CHECK(zeta_even(3) == PiScaled(Rational(1, 945), 6));
    CHECK_THROWS_AS(zeta_even(0), std::invalid_argument);

    SUBCASE("matches partial sums numerically") {
        for (unsigned s = 1; s <= 5; ++s) {
            double partial = 0.0;
            for (int n = 1000000; n >= 1; --n) partial += std::pow(static_cast<double>(n), -2.0 * s);
            const double exact = zeta_even(s).to_double();
            CHECK(std::abs(partial - exact) / exact < 1e-6);
        }
    }
    SUBCASE("float zeta agrees with the exact even values") {
        for (unsigned s = 1; s <= 6; ++s) CHECK(zeta_float(2 * s) == doctest::Approx(zeta_even(s).to_double()).epsilon(1e-13));
        CHECK(zeta_float(3) == doctest::Approx(1.2020569031595942).epsilon(1e-14));
    }
}

TEST_CASE("pi-scaled arithmetic") {
    const PiScaled a(Rational(1, 3), 2);
    CHECK(a + PiScaled(Rational(2, 3), 2) == PiScaled(Rational(1), 2));
    CHECK_THROWS_AS(a + PiScaled(Rational(1), 4), std::invalid_argument);
    CHECK(PiScaled::zero(6).coefficient().is_zero());
    CHECK((a * a).pi_exponent() == 4);
    CHECK_THROWS_AS(PiScaled(Rational(1), 3), std::invalid_argument);
    CHECK(a.str() == "1/3*pi^2");
}

TEST_CASE("upoly basics") {
    UPoly p(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    CHECK(UPoly().degree() == UPoly::kZeroDegree);
    CHECK((UPoly::u() * UPoly::u()).degree() == 2);
    CHECK((UPoly::u() - UPoly::u()).is_zero());
    CHECK((UPoly::u() + UPoly(1)).evaluate(Rational(2)) == Rational(3));
}

TEST_CASE("exp and log") {
    CHECK(series_exp(TruncatedSeries(5)) == TruncatedSeries::constant(5, UPoly(1)));

    const TruncatedSeries e = series_exp(TruncatedSeries::variable(3));
    CHECK(e.coeff(0) == UPoly(1));
    CHECK(e.coeff(1) == UPoly(1));
    CHECK(e.coeff(2) == UPoly(Rational(1, 2)));
    CHECK(e.coeff(3) == UPoly(Rational(1, 6)));

    const TruncatedSeries l = series_log(TruncatedSeries::constant(3, UPoly(1)) + TruncatedSeries::variable(3));
    CHECK(l.coeff(1) == UPoly(1));
    CHECK(l.coeff(2) == UPoly(Rational(-1, 2)));
    CHECK(l.coeff(3) == UPoly(Rational(1, 3)));

    CHECK_THROWS_AS(series_exp(TruncatedSeries::constant(3, UPoly(1))), std::domain_error);
    CHECK_THROWS_AS(series_log(TruncatedSeries::variable(3)), std::domain_error);

    SUBCASE("log and exp are mutually inverse on random admissible series") {
        std::mt19937_64 rng(20240611);
        for (int trial = 0; trial < 6; ++trial) {
            const TruncatedSeries f = random_series(rng, 12, trial % 2 == 0, true);
            CHECK(series_log(series_exp(f)) == f);
            const TruncatedSeries one_plus = TruncatedSeries::constant(12, UPoly(1)) + f;
            CHECK(series_exp(series_log(one_plus)) == one_plus);
        }
    }
}

TEST_CASE("power by u") {
    CHECK(series_pow_u(TruncatedSeries::constant(6, UPoly(1))) == TruncatedSeries::constant(6, UPoly(1)));

    TruncatedSeries f = TruncatedSeries::constant(4, UPoly(1));
    f.set_coeff(2, UPoly(1));
    CHECK(series_pow_u(f).coeff(2) == UPoly::u());

    // log((t/2)/sin(t/2)) = t^2/24 + t^4/2880 + ...; exp(u * that) at t^4 is
    // u/2880 + (u/24)^2/2.
    const TruncatedSeries b = series_pow_u(sine_quotient(6));
    CHECK(b.coeff(4) == UPoly(std::vector<Rational>{Rational(0), Rational(1, 2880), Rational(1, 1152)}));
    for (int k = 0; k <= 6; ++k) CHECK(b.coeff(k).degree() <= k);

    TruncatedSeries with_u = TruncatedSeries::constant(4, UPoly(1));
    with_u.set_coeff(1, UPoly::u());
    CHECK_THROWS_AS(series_pow_u(with_u), std::domain_error);
}

TEST_CASE("sine quotient") {
    const TruncatedSeries s = sine_quotient(15);
    CHECK(s.coeff(0) == UPoly(1));
    CHECK(s.coeff(1).is_zero());
    CHECK(s.coeff(2) == UPoly(Rational(1, 24)));
    CHECK(s.coeff(4) == UPoly(Rational(7, 5760)));
    for (int k = 1; k <= 15; k += 2) CHECK(s.coeff(k).is_zero());

    // Numeric spot check at t = 1: (1/2)/sin(1/2).
    double approx = 0.0;
    for (int k = 0; k <= 15; ++k) approx += s.coeff(k).coeff(0).to_double();
    CHECK(approx == doctest::Approx(0.5 / std::sin(0.5)).epsilon(1e-12));
}

TEST_CASE("lagrange inversion") {
    CHECK(lagrange_invert(TruncatedSeries::variable(6)) == TruncatedSeries::variable(6));

    TruncatedSeries q = TruncatedSeries::variable(4);
    q.set_coeff(2, UPoly(1));
    const TruncatedSeries r = lagrange_invert(q);
    CHECK(r.coeff(1) == UPoly(1));
    CHECK(r.coeff(2) == UPoly(-1));
    CHECK(r.coeff(3) == UPoly(2));
    CHECK(r.coeff(4) == UPoly(-5));
    CHECK(compose(q, r) == TruncatedSeries::variable(4));

    CHECK_THROWS_AS(lagrange_invert(TruncatedSeries::constant(4, UPoly(1))), std::domain_error);
    TruncatedSeries bad = TruncatedSeries::variable(4) * UPoly(2);
    CHECK_THROWS_AS(lagrange_invert(bad), std::domain_error);

    SUBCASE("contract and involution on random admissible series") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 5; ++trial) {
            TruncatedSeries g = random_series(rng, 10, trial % 2 == 1, true);
            g.set_coeff(1, UPoly(1));
            const TruncatedSeries inv = lagrange_invert(g);
            CHECK(compose(g, inv) == TruncatedSeries::variable(10));
            CHECK(compose(inv, g) == TruncatedSeries::variable(10));
            CHECK(lagrange_invert(inv) == g);
        }
    }
}

TEST_CASE("series arithmetic truncates to the shorter order") {
    const TruncatedSeries a = TruncatedSeries::variable(8);
    const TruncatedSeries b = TruncatedSeries::variable(3);
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).coeff(2) == UPoly(1));
    const TruncatedSeries inv = (TruncatedSeries::constant(5, UPoly(1)) - a.truncated(5)).reciprocal();
    for (int k = 0; k <= 5; ++k) CHECK(inv.coeff(k) == UPoly(1));
}
