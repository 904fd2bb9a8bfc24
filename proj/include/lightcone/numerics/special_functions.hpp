#pragma once

namespace lightcone::numerics {

// Cylindrical Bessel function of the first kind, order 1. Odd in x.
double bessel_j1(double x);

// Modified Bessel function of the second kind, order 1. Throws DomainError for x <= 0.
double bessel_k1(double x);

} // namespace lightcone::numerics
