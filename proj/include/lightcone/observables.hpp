#pragma once

#include "lightcone/source_state.hpp"

namespace lightcone {

struct SplitExpectation {
    double vacuum = 0.0;
    double source = 0.0;
    double total = 0.0;
    double err_est = 0.0;  // on the source part
};

struct CorrelationSplit {
    complex vacuum{};
    double source = 0.0;
    complex total{};
    double err_est = 0.0;
};

// <Psi|Phi(x)|Psi> = g Delta_ret.
ComplexSample field_expectation(const SpacetimeInterval& iv, const SourceSpec& src,
                                const FieldParams& p, const QuadratureSpec& spec,
                                double eps = kDefaultBandEps);

// <0|Phi^2|0> with a hard cutoff: (4 pi^2)^-1 \int_0^lambda k^2 / omega dk.
double vacuum_intensity(const FieldParams& p);
// Same constant from the radial momentum engine, truncated at lambda.
double vacuum_intensity_quadrature(const FieldParams& p, const QuadratureSpec& spec);

// <0|H|0> per unit volume: (4 pi^2)^-1 \int_0^lambda k^2 omega dk.
double vacuum_energy_density(const FieldParams& p);
double vacuum_energy_density_quadrature(const FieldParams& p, const QuadratureSpec& spec);

SplitExpectation intensity_expectation(const SpacetimeInterval& iv, const SourceSpec& src,
                                       const FieldParams& p, const QuadratureSpec& spec,
                                       double eps = kDefaultBandEps);

// Source part 1/2 g^2 [(d_r Delta_ret)^2 + (d_t Delta_ret)^2 + m^2 Delta_ret^2].
SplitExpectation energy_density_expectation(const SpacetimeInterval& iv, const SourceSpec& src,
                                            const FieldParams& p, const QuadratureSpec& spec,
                                            double eps = kDefaultBandEps);

// x and x' relative to the source, plus their mutual separation x - x'.
CorrelationSplit two_point_correlation(const SpacetimeInterval& iv1,
                                       const SpacetimeInterval& iv2,
                                       const SpacetimeInterval& separation,
                                       const SourceSpec& src, const FieldParams& p,
                                       const QuadratureSpec& spec, double eps = kDefaultBandEps);

// Intensity on the state with its vacuum component removed.
// raw: g^2 Theta(T) |Delta_+|^2. normalized: 2 raw / (g^2 lambda^3 / (6 pi^2)).
ComplexSample truncated_intensity(const SpacetimeInterval& iv, const SourceSpec& src,
                                  const FieldParams& p, const QuadratureSpec& spec,
                                  double eps = kDefaultBandEps, bool normalized = false);

} // namespace lightcone
