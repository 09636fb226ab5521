#pragma once

#include "stratavol/pi_scaled.hpp"
#include "stratavol/rational.hpp"

namespace stratavol::exact {

/// Bernoulli number B_m with B_1 = -1/2. Memoized; thread-safe.
Rational bernoulli(unsigned m);

/// zeta(2s) = (-1)^{s+1} B_{2s} (2 pi)^{2s} / (2 (2s)!) as an exact multiple
/// of pi^{2s}. Throws std::invalid_argument for s == 0.
PiScaled zeta_even(unsigned s);

/// Floating-point zeta(s) for integer s >= 2 (Euler-Maclaurin, ~1e-15
/// relative). Only for display and asymptotic sanity checks.
double zeta_float(unsigned s);

}  // namespace stratavol::exact
