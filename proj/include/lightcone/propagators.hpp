#pragma once

#include <numbers>

#include "lightcone/numerics/quadrature.hpp"

// Invariant functions of a free scalar field of mass m in 3+1 dimensions.
//
// Conventions: signature (+,-,-,-), hbar = c = 1. The Wightman function
//   W(T, r) = <0|Phi(x) Phi(0)|0> = (2 pi)^-3 \int d^3k / (2 omega) exp(i(k.x - omega T))
// is the primitive; everything else is derived from it:
//   Delta_+ = -i W,  Delta_- = conj(Delta_+),  Delta = Delta_+ + Delta_- = 2 Im W,
//   Delta_ret = Theta(T) Delta.
// Delta carries a distribution on the light cone, shell(r) * delta(T - r) on the
// forward branch; PropagatorValue keeps it apart from the pointwise part.
namespace lightcone {

using numerics::complex;
using numerics::ComplexSample;
using numerics::KernelBackend;
using numerics::QuadratureSpec;

inline constexpr double kDefaultBandEps = 0.05;

// Coefficient of delta(T - r) / r in Delta_ret. Fixed by calibrate_shell_coefficient
// (massless mollified quadrature integrated across the cone); see docs/shell_coefficient.md.
inline constexpr double kShellCoefficient = -1.0 / (4.0 * std::numbers::pi);

struct FieldParams {
    double m = 1.0;
    double g = 0.1;
    double lambda = 20.0;

    void validate() const;
    bool operator==(const FieldParams&) const = default;
};

// Relative coordinates of a field point with respect to an event.
class SpacetimeInterval {
public:
    // Throws DomainError unless r >= 0 and both are finite.
    SpacetimeInterval(double T, double r);

    double T() const { return T_; }
    double r() const { return r_; }
    double s2() const { return T_ * T_ - r_ * r_; }

private:
    double T_;
    double r_;
};

enum class LightconeClass { Timelike, Spacelike, Lightlike };

// Lightlike whenever |T - r| < eps or |T + r| < eps; otherwise by the sign of s2.
LightconeClass classify(const SpacetimeInterval& iv, double eps);

const char* to_string(LightconeClass c);

struct PropagatorValue {
    double shell = 0.0;  // cone coefficient on this point's branch; 0 off the band
    complex smooth{};    // pointwise regular part
    double err_est = 0.0;
    bool evaluated = true;  // false inside the light-cone band
};

enum class WightmanPath {
    Auto,        // closed form where it applies (spacelike), quadrature otherwise
    Quadrature,  // always the oscillatory momentum integral
    ClosedForm,  // spacelike only: m K1(m s) / (4 pi^2 s)
};

// Throws LightconeBandError inside the band.
ComplexSample wightman(const SpacetimeInterval& iv, const FieldParams& p,
                       const QuadratureSpec& spec, WightmanPath path = WightmanPath::Auto,
                       double eps = kDefaultBandEps);

// W = m K1(m s) / (4 pi^2 s) with s = sqrt(r^2 - T^2); m = 0 gives 1/(4 pi^2 s^2).
// Throws DomainError unless s2 < 0.
double wightman_spacelike_closed_form(const SpacetimeInterval& iv, double m);

ComplexSample delta_plus(const SpacetimeInterval& iv, const FieldParams& p,
                         const QuadratureSpec& spec, double eps = kDefaultBandEps);
ComplexSample delta_minus(const SpacetimeInterval& iv, const FieldParams& p,
                          const QuadratureSpec& spec, double eps = kDefaultBandEps);

// Pauli-Jordan function. The smooth part is 2 Im W from the quadrature path,
// so its vanishing at spacelike points is a computed fact, not an input.
PropagatorValue delta(const SpacetimeInterval& iv, const FieldParams& p,
                      const QuadratureSpec& spec, double eps = kDefaultBandEps);

// Theta(T) Delta; exactly zero for T <= 0 off the band.
PropagatorValue delta_ret(const SpacetimeInterval& iv, const FieldParams& p,
                          const QuadratureSpec& spec, double eps = kDefaultBandEps);

// Forward-branch cone coefficient of Delta at radius r: kShellCoefficient / r.
double shell_coefficient(double r);

// Integrates the massless Delta_ret, mollified by exp(-(k/width)^2), across the
// light cone at fixed r and returns the resulting coefficient times r.
double calibrate_shell_coefficient(double r, double width, const QuadratureSpec& spec);

enum class PropagatorFn { Wightman, DeltaPlus, DeltaMinus, Delta, DeltaRet };

// Central differences of the smooth part, step h = 1e-4 max(1, r, |T|),
// err_est from step halving plus propagated quadrature error.
// Throws LightconeBandError within 2h of the band.
ComplexSample d_dt(PropagatorFn fn, const SpacetimeInterval& iv, const FieldParams& p,
                   const QuadratureSpec& spec, double eps = kDefaultBandEps);
ComplexSample d_dr(PropagatorFn fn, const SpacetimeInterval& iv, const FieldParams& p,
                   const QuadratureSpec& spec, double eps = kDefaultBandEps);

double finite_difference_step(const SpacetimeInterval& iv);

} // namespace lightcone
