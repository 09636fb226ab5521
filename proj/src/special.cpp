#include "stratavol/special.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace stratavol::exact {

Rational bernoulli(unsigned m) {
    static std::mutex mutex;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mutex);
    // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1.
    while (table.size() <= m) {
        const auto n = static_cast<unsigned>(table.size());
        Rational acc = 0;
        for (unsigned k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * table[k];
        table.push_back(-acc / Rational(Integer(n + 1)));
    }
    return table[m];
}

PiScaled zeta_even(unsigned s) {
    if (s == 0) throw std::invalid_argument("zeta_even: s must be positive");
    Rational c = bernoulli(2 * s) * Rational(Integer(Integer(1) << (2 * s))) / Rational(Integer(2 * factorial(2 * s)));
    if (s % 2 == 0) c = -c;
    return PiScaled(c, static_cast<int>(2 * s));
}

double zeta_float(unsigned s) {
    if (s < 2) throw std::invalid_argument("zeta_float: s must be at least 2");
    constexpr int kCutoff = 20;
    const double sd = s;
    double sum = 0.0;
    for (int n = 1; n < kCutoff; ++n) sum += std::pow(static_cast<double>(n), -sd);
    const double m = kCutoff;
    sum += std::pow(m, 1.0 - sd) / (sd - 1.0) + 0.5 * std::pow(m, -sd);
    // Tail corrections B_{2j}/(2j)! * s(s+1)...(s+2j-2) * m^{-s-2j+1}.
    double rising = sd;
    for (unsigned j = 1; j <= 6; ++j) {
        const double term = bernoulli(2 * j).to_double() / factorial(2 * j).get_d() * rising *
                            std::pow(m, -sd - 2.0 * j + 1.0);
        sum += term;
        rising *= (sd + 2.0 * j - 1.0) * (sd + 2.0 * j);
    }
    return sum;
}

}  // namespace stratavol::exact
