#include "lightcone/propagators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lightcone/errors.hpp"
#include "lightcone/numerics/gauss_legendre.hpp"
#include "lightcone/numerics/radial_integral.hpp"
#include "lightcone/numerics/special_functions.hpp"

namespace lightcone {

namespace {

constexpr double kPi = std::numbers::pi;

using numerics::MomentumWeight;

// Propagators are defined by the Abel limit; a hard cutoff in the caller's
// spec is meant for the vacuum constants only.
QuadratureSpec propagator_spec(const QuadratureSpec& spec) {
    QuadratureSpec out = spec;
    out.hard_cutoff = 0.0;
    return out;
}

void require_off_band(const SpacetimeInterval& iv, double eps, const char* what) {
    if (classify(iv, eps) == LightconeClass::Lightlike) {
        throw LightconeBandError(std::string(what) + ": (T=" + std::to_string(iv.T()) +
                                 ", r=" + std::to_string(iv.r()) + ") lies in the light-cone band");
    }
}

ComplexSample wightman_quadrature(const SpacetimeInterval& iv, const FieldParams& p,
                                  const QuadratureSpec& spec) {
    return numerics::radial_momentum_integral(MomentumWeight::inverse_two_omega(p.m), iv.T(),
                                              iv.r(), propagator_spec(spec));
}

// Cone coefficient on the branch nearest to iv, for band points.
double band_shell(const SpacetimeInterval& iv, bool retarded) {
    if (iv.r() < numerics::kRadialLimitThreshold) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const bool forward = iv.T() > 0.0;
    if (forward) {
        return shell_coefficient(iv.r());
    }
    // Delta is odd in T, so the backward branch carries the opposite sign.
    return retarded ? 0.0 : -shell_coefficient(iv.r());
}

complex evaluate_fn(PropagatorFn fn, const SpacetimeInterval& iv, const FieldParams& p,
                    const QuadratureSpec& spec, double& err) {
    switch (fn) {
    case PropagatorFn::Wightman: {
        const ComplexSample w = wightman(iv, p, spec, WightmanPath::Auto, 0.0);
        err = w.err_est;
        return w.value;
    }
    case PropagatorFn::DeltaPlus: {
        const ComplexSample w = delta_plus(iv, p, spec, 0.0);
        err = w.err_est;
        return w.value;
    }
    case PropagatorFn::DeltaMinus: {
        const ComplexSample w = delta_minus(iv, p, spec, 0.0);
        err = w.err_est;
        return w.value;
    }
    case PropagatorFn::Delta:
    case PropagatorFn::DeltaRet: {
        const PropagatorValue d = delta(iv, p, spec, 0.0);
        err = d.err_est;
        return d.smooth;
    }
    }
    return {};
}

enum class Axis { Time, Radius };

ComplexSample central_difference(PropagatorFn fn, Axis axis, const SpacetimeInterval& iv,
                                 const FieldParams& p, const QuadratureSpec& spec, double eps) {
    const double h = finite_difference_step(iv);
    if (classify(iv, eps + 2.0 * h) == LightconeClass::Lightlike) {
        throw LightconeBandError("finite difference: (T=" + std::to_string(iv.T()) +
                                 ", r=" + std::to_string(iv.r()) +
                                 ") is within two steps of the light-cone band");
    }
    if (fn == PropagatorFn::DeltaRet && iv.T() <= 0.0) {
        return {};
    }
    // Tighten the quadrature so that its error survives division by h.
    QuadratureSpec inner = spec;
    inner.abs_tol = spec.abs_tol * h;
    inner.rel_tol = spec.rel_tol * h;

    auto at = [&](double offset, double& err) {
        const SpacetimeInterval shifted =
            axis == Axis::Time ? SpacetimeInterval(iv.T() + offset, iv.r())
                               : SpacetimeInterval(iv.T(), std::abs(iv.r() + offset));
        return evaluate_fn(fn, shifted, p, inner, err);
    };
    double e1 = 0.0, e2 = 0.0, e3 = 0.0, e4 = 0.0;
    const complex coarse = (at(h, e1) - at(-h, e2)) / (2.0 * h);
    const complex fine = (at(0.5 * h, e3) - at(-0.5 * h, e4)) / h;
    const double truncation = std::abs(fine - coarse) / 3.0;
    return {fine, truncation + (e3 + e4) / h};
}

} // namespace

void FieldParams::validate() const {
    if (!(m >= 0.0) || !std::isfinite(m)) {
        throw ConfigError("FieldParams: m must be finite and >= 0");
    }
    if (!std::isfinite(g)) {
        throw ConfigError("FieldParams: g must be finite");
    }
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw ConfigError("FieldParams: lambda must be finite and > 0");
    }
}

SpacetimeInterval::SpacetimeInterval(double T, double r) : T_(T), r_(r) {
    if (!std::isfinite(T) || !std::isfinite(r) || r < 0.0) {
        throw DomainError("SpacetimeInterval: need finite T and finite r >= 0");
    }
}

LightconeClass classify(const SpacetimeInterval& iv, double eps) {
    const double T = iv.T();
    const double r = iv.r();
    if (std::abs(T - r) < eps || std::abs(T + r) < eps) {
        return LightconeClass::Lightlike;
    }
    const double s2 = iv.s2();
    if (s2 > 0.0) {
        return LightconeClass::Timelike;
    }
    if (s2 < 0.0) {
        return LightconeClass::Spacelike;
    }
    return LightconeClass::Lightlike;
}

const char* to_string(LightconeClass c) {
    switch (c) {
    case LightconeClass::Timelike:
        return "timelike";
    case LightconeClass::Spacelike:
        return "spacelike";
    case LightconeClass::Lightlike:
        return "lightlike";
    }
    return "unknown";
}

double wightman_spacelike_closed_form(const SpacetimeInterval& iv, double m) {
    if (!(iv.s2() < 0.0)) {
        throw DomainError("wightman_spacelike_closed_form: interval is not spacelike");
    }
    const double s = std::sqrt((iv.r() - iv.T()) * (iv.r() + iv.T()));
    if (m == 0.0) {
        return 1.0 / (4.0 * kPi * kPi * s * s);
    }
    return m * numerics::bessel_k1(m * s) / (4.0 * kPi * kPi * s);
}

ComplexSample wightman(const SpacetimeInterval& iv, const FieldParams& p,
                       const QuadratureSpec& spec, WightmanPath path, double eps) {
    require_off_band(iv, eps, "wightman");
    const bool spacelike = iv.s2() < 0.0;
    switch (path) {
    case WightmanPath::ClosedForm:
        return {complex(wightman_spacelike_closed_form(iv, p.m), 0.0), 0.0};
    case WightmanPath::Quadrature:
        return wightman_quadrature(iv, p, spec);
    case WightmanPath::Auto:
        break;
    }
    if (spacelike) {
        const double w = wightman_spacelike_closed_form(iv, p.m);
        return {complex(w, 0.0), 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w)};
    }
    return wightman_quadrature(iv, p, spec);
}

ComplexSample delta_plus(const SpacetimeInterval& iv, const FieldParams& p,
                         const QuadratureSpec& spec, double eps) {
    const ComplexSample w = wightman(iv, p, spec, WightmanPath::Auto, eps);
    return {complex(0.0, -1.0) * w.value, w.err_est};
}

ComplexSample delta_minus(const SpacetimeInterval& iv, const FieldParams& p,
                          const QuadratureSpec& spec, double eps) {
    const ComplexSample plus = delta_plus(iv, p, spec, eps);
    return {std::conj(plus.value), plus.err_est};
}

PropagatorValue delta(const SpacetimeInterval& iv, const FieldParams& p,
                      const QuadratureSpec& spec, double eps) {
    if (classify(iv, eps) == LightconeClass::Lightlike) {
        return {band_shell(iv, false), {}, 0.0, false};
    }
    const ComplexSample w = wightman_quadrature(iv, p, spec);
    return {0.0, complex(2.0 * w.value.imag(), 0.0), 2.0 * w.err_est, true};
}

PropagatorValue delta_ret(const SpacetimeInterval& iv, const FieldParams& p,
                          const QuadratureSpec& spec, double eps) {
    if (classify(iv, eps) == LightconeClass::Lightlike) {
        return {band_shell(iv, true), {}, 0.0, false};
    }
    if (iv.T() <= 0.0) {
        return {};
    }
    return delta(iv, p, spec, eps);
}

double shell_coefficient(double r) {
    if (!(r > 0.0)) {
        throw DomainError("shell_coefficient: r must be positive");
    }
    return kShellCoefficient / r;
}

double calibrate_shell_coefficient(double r, double width, const QuadratureSpec& spec) {
    if (!(r > 0.0) || !(width > 0.0)) {
        throw DomainError("calibrate_shell_coefficient: r and width must be positive");
    }
    // Massless Delta_ret at finite mollifier width is a smooth bump of
    // T-width ~ 2/width around T = r; integrate across it.
    const MomentumWeight weight{0.0, 0.5, numerics::OmegaPower::MinusOne, 1.0 / (width * width)};
    QuadratureSpec inner = spec;
    inner.hard_cutoff = 6.5 * width;
    const double half_window = std::min(r, 24.0 / width);
    const int panels = 64;
    const numerics::GaussRule& gl = numerics::gauss_legendre_16();
    const double lo = r - half_window;
    const double step = 2.0 * half_window / panels;
    long double total = 0.0L;
    for (int j = 0; j < panels; ++j) {
        const double centre = lo + (j + 0.5) * step;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double T = centre + 0.5 * step * gl.nodes[i];
            const ComplexSample w = numerics::radial_momentum_integral(weight, T, r, inner);
            total += 0.5L * step * gl.weights[i] * 2.0L * w.value.imag();
        }
    }
    return static_cast<double>(total) * r;
}

double finite_difference_step(const SpacetimeInterval& iv) {
    return 1e-4 * std::max({1.0, iv.r(), std::abs(iv.T())});
}

ComplexSample d_dt(PropagatorFn fn, const SpacetimeInterval& iv, const FieldParams& p,
                   const QuadratureSpec& spec, double eps) {
    return central_difference(fn, Axis::Time, iv, p, spec, eps);
}

ComplexSample d_dr(PropagatorFn fn, const SpacetimeInterval& iv, const FieldParams& p,
                   const QuadratureSpec& spec, double eps) {
    return central_difference(fn, Axis::Radius, iv, p, spec, eps);
}

} // namespace lightcone
