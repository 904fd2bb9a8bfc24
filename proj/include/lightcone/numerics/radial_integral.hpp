#pragma once

#include <functional>

#include "lightcone/numerics/panel_kernels.hpp"
#include "lightcone/numerics/quadrature.hpp"

namespace lightcone::numerics {

// Below this radius the radial form sin(kr)/r is replaced by its limit k.
inline constexpr double kRadialLimitThreshold = 1e-6;

// w(k) = scale * omega^power * exp(-gauss_rate k^2), omega = sqrt(k^2 + mass^2).
// This family runs on the vectorised panel kernels.
struct MomentumWeight {
    double mass = 0.0;
    double scale = 1.0;
    OmegaPower power = OmegaPower::Zero;
    double gauss_rate = 0.0;

    double operator()(double k) const;

    // 1/(2 omega): the Lorentz-invariant measure d^3k / (2 omega).
    static MomentumWeight inverse_two_omega(double mass);
    // (2 omega)^(-1/2): the Newton-Wigner mode normalisation.
    static MomentumWeight inverse_sqrt_two_omega(double mass);
    static MomentumWeight gaussian(double mass, double rate);
};

// Real weight evaluated point by point on the scalar path.
using WeightFunction = std::function<double(double)>;

// (2 pi)^-3 \int d^3k w(k) exp(i(k.x - omega T)) with |x| = r, reduced to
//   (2 pi^2 r)^-1 \int_0^inf dk k sin(kr) w(k) exp(-i omega T)
// (limit form (2 pi^2)^-1 \int dk k^2 w exp(-i omega T) for r < kRadialLimitThreshold).
//
// The integrals are understood as Abel limits: w may grow like a power of k.
// With spec.hard_cutoff > 0 the k-range is truncated at the cutoff instead.
// Otherwise the accelerated path runs first; if it fails and
// spec.mollifier_widths is nonempty, the mollified path is tried.
// Throws ConvergenceError if no path meets the tolerances.
ComplexSample radial_momentum_integral(const MomentumWeight& weight, double T, double r,
                                       const QuadratureSpec& spec);
ComplexSample radial_momentum_integral(const WeightFunction& weight, double mass, double T,
                                       double r, const QuadratureSpec& spec);

// Half-period panels between consecutive phase levels of each exponential
// branch, summed and extrapolated with the epsilon algorithm.
ComplexSample radial_momentum_integral_accelerated(const MomentumWeight& weight, double T,
                                                   double r, const QuadratureSpec& spec);
ComplexSample radial_momentum_integral_accelerated(const WeightFunction& weight, double mass,
                                                   double T, double r,
                                                   const QuadratureSpec& spec);

// Integrand multiplied by exp(-(k/L)^2) for every L in spec.mollifier_widths,
// then polynomially extrapolated in 1/L^2 to L -> infinity. Needs >= 2 widths.
ComplexSample radial_momentum_integral_mollified(const MomentumWeight& weight, double T,
                                                 double r, const QuadratureSpec& spec);
ComplexSample radial_momentum_integral_mollified(const WeightFunction& weight, double mass,
                                                 double T, double r, const QuadratureSpec& spec);

// Neville extrapolation of samples (x_i, y_i) to x = 0. err_est is the change
// contributed by the last point.
ComplexSample extrapolate_to_zero(std::span<const double> x, std::span<const complex> y);

} // namespace lightcone::numerics
