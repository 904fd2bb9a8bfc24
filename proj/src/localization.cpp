#include "lightcone/localization.hpp"

#include <cmath>

#include "lightcone/errors.hpp"
#include "lightcone/numerics/radial_integral.hpp"

namespace lightcone {

namespace {

void require_off_band(const SpacetimeInterval& iv, double eps, const char* what) {
    if (classify(iv, eps) == LightconeClass::Lightlike) {
        throw LightconeBandError(std::string(what) + ": point lies in the light-cone band");
    }
}

} // namespace

ComplexSample nw_wavefunction(const SpacetimeInterval& iv, const FieldParams& p,
                              const QuadratureSpec& spec, double eps) {
    p.validate();
    if (!(iv.T() > 0.0)) {
        throw DomainError("nw_wavefunction: requires T > 0");
    }
    require_off_band(iv, eps, "nw_wavefunction");
    const auto w = numerics::MomentumWeight::inverse_sqrt_two_omega(p.m);
    QuadratureSpec inner = spec;
    inner.hard_cutoff = 0.0;
    ComplexSample acc = numerics::radial_momentum_integral_accelerated(w, iv.T(), iv.r(), inner);
    if (inner.mollifier_widths.size() >= 2) {
        const ComplexSample moll =
            numerics::radial_momentum_integral_mollified(w, iv.T(), iv.r(), inner);
        acc.err_est += moll.err_est + std::abs(acc.value - moll.value);
    }
    return acc;
}

ComplexSample nw_density(const SpacetimeInterval& iv, const SourceSpec& src,
                         const FieldParams& p, const QuadratureSpec& spec, double eps) {
    if (iv.T() < 0.0) {
        require_off_band(iv, eps, "nw_density");
        return {};
    }
    const ComplexSample psi = nw_wavefunction(iv, p, spec, eps);
    const double g2 = src.g * src.g;
    const double mod = std::abs(psi.value);
    return {complex(g2 * std::norm(psi.value), 0.0),
            g2 * (2.0 * mod * psi.err_est + psi.err_est * psi.err_est)};
}

AsymptoticValue nw_asymptotic(const SpacetimeInterval& iv, const FieldParams& p) {
    p.validate();
    if (!(iv.T() > 0.0)) {
        throw DomainError("nw_asymptotic: requires T > 0");
    }
    const double s2 = iv.s2();
    if (std::abs(s2) < 1.0) {
        throw DomainError("nw_asymptotic: outside the asymptotic regime |T^2 - r^2| >= 1");
    }
    AsymptoticValue out;
    out.envelope = p.m * std::sqrt(iv.T()) / std::abs(s2);
    if (s2 > 0.0) {
        out.regime = LightconeClass::Timelike;
        out.phase_or_decay = std::polar(1.0, -p.m * std::sqrt(s2));
    } else {
        out.regime = LightconeClass::Spacelike;
        out.phase_or_decay = std::exp(-p.m * std::sqrt(-s2));
    }
    return out;
}

ComplexSample glauber_density(const SpacetimeInterval& iv, const SourceSpec& src,
                              const FieldParams& p, const QuadratureSpec& spec, double eps) {
    if (iv.T() == 0.0) {
        throw DomainError("glauber_density: T == 0 is degenerate");
    }
    require_off_band(iv, eps, "glauber_density");
    if (iv.T() < 0.0) {
        return {};
    }
    const ComplexSample dp = delta_plus(iv, p, spec, eps);
    const ComplexSample dm = delta_minus(iv, p, spec, eps);
    const double g2 = src.g * src.g;
    const double value = g2 * (dp.value * dm.value).real();
    const double mod = std::abs(dp.value);
    return {complex(value, 0.0), g2 * (2.0 * mod * dp.err_est + dp.err_est * dm.err_est)};
}

const char* to_string(CommutatorKind k) {
    switch (k) {
    case CommutatorKind::Field:
        return "field";
    case CommutatorKind::NW:
        return "nw";
    case CommutatorKind::Glauber:
        return "glauber";
    }
    return "?";
}

std::vector<double> microcausality_coefficients(CommutatorKind kind,
                                                const SpacetimeInterval& separation,
                                                const FieldParams& p, const QuadratureSpec& spec,
                                                double eps) {
    require_off_band(separation, eps, "microcausality_coefficients");
    switch (kind) {
    case CommutatorKind::Field:
        return {std::abs(delta(separation, p, spec, eps).smooth)};
    case CommutatorKind::NW:
        return {std::abs(d_dt(PropagatorFn::DeltaPlus, separation, p, spec, eps).value),
                std::abs(d_dt(PropagatorFn::DeltaMinus, separation, p, spec, eps).value)};
    case CommutatorKind::Glauber:
        return {std::abs(delta_plus(separation, p, spec, eps).value),
                std::abs(delta_minus(separation, p, spec, eps).value)};
    }
    return {};
}

} // namespace lightcone
