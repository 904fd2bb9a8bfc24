#include "lightcone/numerics/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lightcone/errors.hpp"

namespace lightcone::numerics {

// Both kernels are backed by the C++17 mathematical special functions, which
// only accept nonnegative arguments.

double bessel_j1(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("bessel_j1: non-finite argument");
    }
    if (x == 0.0) {
        return 0.0;
    }
    const double value = std::cyl_bessel_j(1.0, std::abs(x));
    return x < 0.0 ? -value : value;
}

double bessel_k1(double x) {
    if (!(x > 0.0)) {
        throw DomainError("bessel_k1: argument must be positive, got " + std::to_string(x));
    }
    if (x > 700.0) {
        return 0.0;
    }
    return std::cyl_bessel_k(1.0, x);
}

} // namespace lightcone::numerics
