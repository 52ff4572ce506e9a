#pragma once

#include <cmath>
#include <numbers>

#include "tq/cmatrix.hpp"

namespace tq {

/// omega^t := exp(2*pi*i*t/3) for any real t. Integer t gives the usual cube
/// roots of unity; fractional exponents (1/2, 5/2, ...) are taken literally.
inline Complex omega_power(double t) {
    const double arg = 2.0 * std::numbers::pi * t / 3.0;
    return Complex{std::cos(arg), std::sin(arg)};
}

}  // namespace tq
