#pragma once

#include <span>

#include "lightcone/numerics/quadrature.hpp"

namespace lightcone::numerics {

// Exponent p in the omega^p factor of the amplitude.
enum class OmegaPower { MinusOne, MinusHalf, Zero, PlusHalf, PlusOne };

// Integrand f(k) = k^k_power * omega^p * exp(-gauss_rate k^2) * exp(i (phase_k k - phase_T omega)),
// omega = sqrt(k^2 + mass^2). Every momentum integral in the library is a
// linear combination of these.
struct PanelIntegrand {
    double mass = 0.0;
    OmegaPower omega_power = OmegaPower::Zero;
    int k_power = 0;  // 0, 1 or 2
    double gauss_rate = 0.0;
    double phase_k = 0.0;
    double phase_T = 0.0;
};

// 16-point Gauss-Legendre integral of f over each panel [edges[j], edges[j+1]].
// values[j] receives the integral, l1[j] the quadrature of |f| (round-off scale).
// Requires values.size() == l1.size() == edges.size() - 1.
void integrate_panels(const PanelIntegrand& f, std::span<const double> edges,
                      std::span<complex> values, std::span<double> l1, KernelBackend backend);

// Resolves Auto to the concrete backend used on this host.
KernelBackend resolve_backend(KernelBackend requested);

bool avx2_available();

namespace detail {
void integrate_panels_scalar(const PanelIntegrand& f, std::span<const double> edges,
                             std::span<complex> values, std::span<double> l1);
#if defined(LIGHTCONE_HAVE_AVX2)
void integrate_panels_avx2(const PanelIntegrand& f, std::span<const double> edges,
                           std::span<complex> values, std::span<double> l1);
#endif
} // namespace detail

} // namespace lightcone::numerics
