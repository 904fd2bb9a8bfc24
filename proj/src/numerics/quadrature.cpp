#include "lightcone/numerics/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "lightcone/errors.hpp"

namespace lightcone::numerics {

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw ConfigError("QuadratureSpec: abs_tol and rel_tol must be positive");
    }
    if (max_panels < 4) {
        throw ConfigError("QuadratureSpec: max_panels must be >= 4");
    }
    if (accel_order < 2) {
        throw ConfigError("QuadratureSpec: accel_order must be >= 2");
    }
    for (std::size_t i = 0; i < mollifier_widths.size(); ++i) {
        if (!(mollifier_widths[i] > 0.0) ||
            (i > 0 && !(mollifier_widths[i] > mollifier_widths[i - 1]))) {
            throw ConfigError("QuadratureSpec: mollifier_widths must be positive and strictly increasing");
        }
    }
    if (!(hard_cutoff >= 0.0)) {
        throw ConfigError("QuadratureSpec: hard_cutoff must be >= 0");
    }
}

std::vector<double> QuadratureSpec::mollifier_ladder(double base, int count) {
    std::vector<double> widths;
    widths.reserve(count);
    for (int i = 0; i < count; ++i) {
        widths.push_back(base * std::pow(std::numbers::sqrt2, i));
    }
    return widths;
}

} // namespace lightcone::numerics
