#include <cmath>

#include "lightcone/numerics/gauss_legendre.hpp"
#include "lightcone/numerics/panel_kernels.hpp"

namespace lightcone::numerics::detail {

namespace {

double omega_factor(OmegaPower p, double omega) {
    switch (p) {
    case OmegaPower::MinusOne:
        return 1.0 / omega;
    case OmegaPower::MinusHalf:
        return 1.0 / std::sqrt(omega);
    case OmegaPower::Zero:
        return 1.0;
    case OmegaPower::PlusHalf:
        return std::sqrt(omega);
    case OmegaPower::PlusOne:
        return omega;
    }
    return 1.0;
}

} // namespace

void integrate_panels_scalar(const PanelIntegrand& f, std::span<const double> edges,
                             std::span<complex> values, std::span<double> l1) {
    const GaussRule& gl = gauss_legendre_16();
    const double m2 = f.mass * f.mass;
    for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
        const double centre = 0.5 * (edges[j] + edges[j + 1]);
        const double half = 0.5 * (edges[j + 1] - edges[j]);
        double re = 0.0;
        double im = 0.0;
        double abs_sum = 0.0;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double k = centre + half * gl.nodes[i];
            const double omega = std::sqrt(k * k + m2);
            double amp = gl.weights[i] * omega_factor(f.omega_power, omega);
            for (int p = 0; p < f.k_power; ++p) {
                amp *= k;
            }
            if (f.gauss_rate > 0.0) {
                amp *= std::exp(-f.gauss_rate * k * k);
            }
            const double theta = f.phase_k * k - f.phase_T * omega;
            re += amp * std::cos(theta);
            im += amp * std::sin(theta);
            abs_sum += std::abs(amp);
        }
        values[j] = complex(half * re, half * im);
        l1[j] = std::abs(half) * abs_sum;
    }
}

} // namespace lightcone::numerics::detail
