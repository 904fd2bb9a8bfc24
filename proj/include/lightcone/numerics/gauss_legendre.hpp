#pragma once

#include <vector>

namespace lightcone::numerics {

// Nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Newton iteration on the Legendre recurrence; accurate to a few ulp.
GaussRule make_gauss_legendre(int n);

// The 16-point rule used by every panel kernel (built once, immutable).
const GaussRule& gauss_legendre_16();

} // namespace lightcone::numerics
