#pragma once

#include <vector>

#include "lightcone/source_state.hpp"

namespace lightcone {

// Newton-Wigner amplitude
//   psi(T, r) = (2 pi)^-3 \int d^3k (2 omega)^-1/2 exp(i(k.x - omega T)),
// an Abel limit (the weight grows like sqrt(k)). Evaluated by the accelerated
// path; when spec.mollifier_widths is nonempty the mollified path is run as
// well and their difference is added to err_est.
// Requires T > 0 off the band.
ComplexSample nw_wavefunction(const SpacetimeInterval& iv, const FieldParams& p,
                              const QuadratureSpec& spec, double eps = kDefaultBandEps);

// g^2 Theta(T) |psi|^2. Zero for T < 0.
ComplexSample nw_density(const SpacetimeInterval& iv, const SourceSpec& src,
                         const FieldParams& p, const QuadratureSpec& spec,
                         double eps = kDefaultBandEps);

struct AsymptoticValue {
    double envelope = 0.0;    // m sqrt(T) / |T^2 - r^2|
    complex phase_or_decay{};  // exp(-i m sqrt(s2)) or exp(-m sqrt(-s2))
    LightconeClass regime = LightconeClass::Lightlike;
};

// Large-|T^2 - r^2| form of psi, up to an overall constant.
// Throws DomainError for T <= 0 or |T^2 - r^2| < 1.
AsymptoticValue nw_asymptotic(const SpacetimeInterval& iv, const FieldParams& p);

// g^2 Theta(T) Delta_+ Delta_-.
ComplexSample glauber_density(const SpacetimeInterval& iv, const SourceSpec& src,
                              const FieldParams& p, const QuadratureSpec& spec,
                              double eps = kDefaultBandEps);

enum class CommutatorKind { Field, NW, Glauber };

const char* to_string(CommutatorKind k);

// Magnitudes of the c-number coefficients multiplying the commutator:
//   Field   -> |Delta|
//   NW      -> |d_t Delta_+|, |d_t Delta_-|
//   Glauber -> |Delta_+|, |Delta_-|
// A nonzero entry at spacelike separation witnesses a microcausality violation.
std::vector<double> microcausality_coefficients(CommutatorKind kind,
                                                const SpacetimeInterval& separation,
                                                const FieldParams& p, const QuadratureSpec& spec,
                                                double eps = kDefaultBandEps);

} // namespace lightcone
