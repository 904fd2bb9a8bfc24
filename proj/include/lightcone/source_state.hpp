#pragma once

#include "lightcone/propagators.hpp"

// State produced from the vacuum by an instantaneous pointlike classical
// source, to second order in the coupling. The source sits at the spatial
// origin and switches on at y0; field points are given relative to it.
namespace lightcone {

struct SourceSpec {
    double y0 = 0.0;
    double g = 0.1;

    bool operator==(const SourceSpec&) const = default;
};

struct StateExpansion {
    complex order0{1.0, 0.0};
    // Parameters of the one-particle amplitude alpha(k).
    double g = 0.0;
    double y0 = 0.0;
    double m = 0.0;
    // Coefficient of |0> at second order, -||order1||^2 / 2.
    complex order2_vacuum{};
    double lambda = 0.0;
    // \int_{|k| <= lambda} d^3k 2 omega |alpha(k)|^2.
    double order1_norm_sq = 0.0;
};

// alpha(k) = -i g Theta(t - y0) (2 pi)^-3/2 (2 omega)^-1/2 for a source at the origin.
// Throws DomainError at t == y0.
complex alpha_amplitude(double k, double t, const SourceSpec& src, const FieldParams& p);

// Cutoff-regularised one-particle norm, by quadrature of 4 pi k^2 2 omega |alpha|^2.
double one_particle_norm_sq(const SourceSpec& src, const FieldParams& p);

// g^2 lambda^3 / (6 pi^2).
double one_particle_norm_sq_analytic(double g, double lambda);

// Expansion at a time t after the switch-on (t > y0), cutoff p.lambda.
StateExpansion expand_state(const SourceSpec& src, const FieldParams& p);

// <Psi|Psi> to second order: 1 + ||order1||^2 + 2 Re(order2_vacuum).
double state_norm(const StateExpansion& st);

// Psi(x) = <x|Psi^(1)>, computed from the projection integral of alpha(k)
// against the mode functions (not from the propagator code path).
// Equals g Theta(T) Delta_+(T, r). Zero for T < 0; throws DomainError at T == 0.
ComplexSample one_particle_wavefunction(const SpacetimeInterval& iv, const SourceSpec& src,
                                        const FieldParams& p, const QuadratureSpec& spec,
                                        double eps = kDefaultBandEps);

} // namespace lightcone
