#pragma once

#include "stratavol/rational.hpp"

#include <ostream>
#include <string>

namespace stratavol::exact {

/// coefficient * pi^pi_exponent with an even, non-negative exponent.
class PiScaled {
public:
    PiScaled() = default;
    PiScaled(Rational coefficient, int pi_exponent);

    static PiScaled zero(int pi_exponent) { return PiScaled(Rational(0), pi_exponent); }

    const Rational& coefficient() const { return coefficient_; }
    int pi_exponent() const { return pi_exponent_; }

    /// Both throw std::invalid_argument when the exponents differ.
    PiScaled& operator+=(const PiScaled& rhs);
    PiScaled& operator-=(const PiScaled& rhs);

    friend PiScaled operator+(PiScaled a, const PiScaled& b) { return a += b; }
    friend PiScaled operator-(PiScaled a, const PiScaled& b) { return a -= b; }
    friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
        return PiScaled(a.coefficient_ * b.coefficient_, a.pi_exponent_ + b.pi_exponent_);
    }
    friend PiScaled operator*(const Rational& a, const PiScaled& b) {
        return PiScaled(a * b.coefficient_, b.pi_exponent_);
    }
    friend bool operator==(const PiScaled&, const PiScaled&) = default;

    double to_double() const;
    /// e.g. "1/120*pi^4"
    std::string str() const;

private:
    Rational coefficient_{0};
    int pi_exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PiScaled& v);

}  // namespace stratavol::exact
