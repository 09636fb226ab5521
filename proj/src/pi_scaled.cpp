#include "stratavol/pi_scaled.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stratavol::exact {

PiScaled::PiScaled(Rational coefficient, int pi_exponent)
    : coefficient_(std::move(coefficient)), pi_exponent_(pi_exponent) {
    if (pi_exponent < 0 || pi_exponent % 2 != 0) {
        throw std::invalid_argument("PiScaled: pi exponent must be even and non-negative, got " +
                                    std::to_string(pi_exponent));
    }
}

PiScaled& PiScaled::operator+=(const PiScaled& rhs) {
    if (rhs.pi_exponent_ != pi_exponent_) {
        throw std::invalid_argument("PiScaled: cannot add pi^" + std::to_string(pi_exponent_) +
                                    " and pi^" + std::to_string(rhs.pi_exponent_));
    }
    coefficient_ += rhs.coefficient_;
    return *this;
}

PiScaled& PiScaled::operator-=(const PiScaled& rhs) {
    if (rhs.pi_exponent_ != pi_exponent_) {
        throw std::invalid_argument("PiScaled: cannot subtract pi^" + std::to_string(rhs.pi_exponent_) +
                                    " from pi^" + std::to_string(pi_exponent_));
    }
    coefficient_ -= rhs.coefficient_;
    return *this;
}

double PiScaled::to_double() const {
    return coefficient_.to_double() * std::pow(std::numbers::pi, pi_exponent_);
}

std::string PiScaled::str() const {
    if (pi_exponent_ == 0) return coefficient_.str();
    return coefficient_.str() + "*pi^" + std::to_string(pi_exponent_);
}

std::ostream& operator<<(std::ostream& os, const PiScaled& v) { return os << v.str(); }

}  // namespace stratavol::exact
