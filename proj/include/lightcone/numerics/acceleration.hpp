#pragma once

#include <span>

#include "lightcone/numerics/quadrature.hpp"

namespace lightcone::numerics {

// Wynn epsilon algorithm applied to a sequence of partial sums.
//
// Uses table columns up to `order` and returns the last entry of the highest
// even column; err_est is the magnitude of the last correction in that
// column. A table that degenerates because consecutive entries coincide is
// treated as converged: the common value is returned with err_est 0.
//
// Requires partial_sums.size() >= order + 2 (throws DomainError otherwise).
ComplexSample accelerate(std::span<const complex> partial_sums, int order);

} // namespace lightcone::numerics
