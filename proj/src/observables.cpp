#include "lightcone/observables.hpp"

#include <cmath>
#include <numbers>

#include "lightcone/errors.hpp"
#include "lightcone/numerics/radial_integral.hpp"

namespace lightcone {

namespace {

constexpr double kPi = std::numbers::pi;

QuadratureSpec cutoff_spec(const FieldParams& p, const QuadratureSpec& spec) {
    p.validate();
    QuadratureSpec s = spec;
    s.hard_cutoff = p.lambda;
    s.mollifier_widths.clear();
    return s;
}

} // namespace

ComplexSample field_expectation(const SpacetimeInterval& iv, const SourceSpec& src,
                                const FieldParams& p, const QuadratureSpec& spec, double eps) {
    const PropagatorValue d = delta_ret(iv, p, spec, eps);
    if (!d.evaluated) {
        throw LightconeBandError("field_expectation: point lies in the light-cone band");
    }
    return {src.g * d.smooth.real(), std::abs(src.g) * d.err_est};
}

double vacuum_intensity(const FieldParams& p) {
    p.validate();
    const double l = p.lambda;
    const double m = p.m;
    if (m == 0.0) {
        return l * l / (8.0 * kPi * kPi);
    }
    return (l * std::sqrt(l * l + m * m) - m * m * std::asinh(l / m)) / (8.0 * kPi * kPi);
}

double vacuum_intensity_quadrature(const FieldParams& p, const QuadratureSpec& spec) {
    const auto w = numerics::MomentumWeight::inverse_two_omega(p.m);
    return numerics::radial_momentum_integral(w, 0.0, 0.0, cutoff_spec(p, spec)).value.real();
}

double vacuum_energy_density(const FieldParams& p) {
    p.validate();
    const double l = p.lambda;
    const double m = p.m;
    const double om = std::sqrt(l * l + m * m);
    double integral = l * (2.0 * l * l + m * m) * om / 8.0;
    if (m > 0.0) {
        integral -= m * m * m * m * std::asinh(l / m) / 8.0;
    }
    return integral / (4.0 * kPi * kPi);
}

double vacuum_energy_density_quadrature(const FieldParams& p, const QuadratureSpec& spec) {
    const numerics::MomentumWeight w{p.m, 0.5, numerics::OmegaPower::PlusOne, 0.0};
    return numerics::radial_momentum_integral(w, 0.0, 0.0, cutoff_spec(p, spec)).value.real();
}

SplitExpectation intensity_expectation(const SpacetimeInterval& iv, const SourceSpec& src,
                                       const FieldParams& p, const QuadratureSpec& spec,
                                       double eps) {
    const ComplexSample f = field_expectation(iv, src, p, spec, eps);
    SplitExpectation out;
    out.vacuum = vacuum_intensity(p);
    out.source = f.value.real() * f.value.real();
    out.total = out.vacuum + out.source;
    out.err_est = 2.0 * std::abs(f.value.real()) * f.err_est + f.err_est * f.err_est;
    return out;
}

SplitExpectation energy_density_expectation(const SpacetimeInterval& iv, const SourceSpec& src,
                                            const FieldParams& p, const QuadratureSpec& spec,
                                            double eps) {
    SplitExpectation out;
    out.vacuum = vacuum_energy_density(p);
    const PropagatorValue d = delta_ret(iv, p, spec, eps);
    if (!d.evaluated) {
        throw LightconeBandError("energy_density_expectation: point lies in the light-cone band");
    }
    if (iv.T() <= 0.0) {
        out.total = out.vacuum;
        return out;
    }
    const ComplexSample dt = d_dt(PropagatorFn::DeltaRet, iv, p, spec, eps);
    const ComplexSample dr = d_dr(PropagatorFn::DeltaRet, iv, p, spec, eps);
    const double v = d.smooth.real();
    const double a = dt.value.real();
    const double b = dr.value.real();
    const double g2 = src.g * src.g;
    out.source = 0.5 * g2 * (b * b + a * a + p.m * p.m * v * v);
    out.total = out.vacuum + out.source;
    out.err_est = g2 * (std::abs(b) * dr.err_est + std::abs(a) * dt.err_est +
                        p.m * p.m * std::abs(v) * d.err_est) +
                  0.5 * g2 * (dr.err_est * dr.err_est + dt.err_est * dt.err_est +
                              p.m * p.m * d.err_est * d.err_est);
    return out;
}

CorrelationSplit two_point_correlation(const SpacetimeInterval& iv1,
                                       const SpacetimeInterval& iv2,
                                       const SpacetimeInterval& separation,
                                       const SourceSpec& src, const FieldParams& p,
                                       const QuadratureSpec& spec, double eps) {
    const ComplexSample w = wightman(separation, p, spec, WightmanPath::Auto, eps);
    const ComplexSample f1 = field_expectation(iv1, src, p, spec, eps);
    const ComplexSample f2 = field_expectation(iv2, src, p, spec, eps);
    CorrelationSplit out;
    out.vacuum = w.value;
    out.source = f1.value.real() * f2.value.real();
    out.total = out.vacuum + out.source;
    out.err_est = w.err_est + std::abs(f1.value.real()) * f2.err_est +
                  std::abs(f2.value.real()) * f1.err_est + f1.err_est * f2.err_est;
    return out;
}

ComplexSample truncated_intensity(const SpacetimeInterval& iv, const SourceSpec& src,
                                  const FieldParams& p, const QuadratureSpec& spec, double eps,
                                  bool normalized) {
    if (iv.T() == 0.0) {
        throw DomainError("truncated_intensity: T == 0 is degenerate");
    }
    if (classify(iv, eps) == LightconeClass::Lightlike) {
        throw LightconeBandError("truncated_intensity: point lies in the light-cone band");
    }
    if (iv.T() < 0.0) {
        return {};
    }
    const ComplexSample dp = delta_plus(iv, p, spec, eps);
    const double g2 = src.g * src.g;
    const double mod = std::abs(dp.value);
    double value = g2 * std::norm(dp.value);
    double err = g2 * (2.0 * mod * dp.err_est + dp.err_est * dp.err_est);
    if (normalized) {
        const double n1 = one_particle_norm_sq_analytic(src.g, p.lambda);
        if (!(n1 > 0.0)) {
            throw DomainError("truncated_intensity: normalized mode needs g != 0");
        }
        value = 2.0 * value / n1;
        err = 2.0 * err / n1;
    }
    return {complex(value, 0.0), err};
}

} // namespace lightcone
