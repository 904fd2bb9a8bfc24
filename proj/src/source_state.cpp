#include "lightcone/source_state.hpp"

#include <cmath>
#include <numbers>

#include "lightcone/errors.hpp"
#include "lightcone/numerics/gauss_legendre.hpp"
#include "lightcone/numerics/radial_integral.hpp"

namespace lightcone {

namespace {

constexpr double kPi = std::numbers::pi;
const double kTwoPiPow32 = std::pow(2.0 * kPi, 1.5);

} // namespace

complex alpha_amplitude(double k, double t, const SourceSpec& src, const FieldParams& p) {
    if (k < 0.0) {
        throw DomainError("alpha_amplitude: k must be >= 0");
    }
    if (t == src.y0) {
        throw DomainError("alpha_amplitude: t == y0 is degenerate");
    }
    if (t < src.y0) {
        return {};
    }
    const double omega = std::sqrt(k * k + p.m * p.m);
    return {0.0, -src.g / (kTwoPiPow32 * std::sqrt(2.0 * omega))};
}

double one_particle_norm_sq(const SourceSpec& src, const FieldParams& p) {
    p.validate();
    const numerics::GaussRule& gl = numerics::gauss_legendre_16();
    const double t = src.y0 + 1.0;
    const double half = 0.5 * p.lambda;
    double total = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double k = half * (1.0 + gl.nodes[i]);
        const double omega = std::sqrt(k * k + p.m * p.m);
        const double a = std::norm(alpha_amplitude(k, t, src, p));
        total += gl.weights[i] * 4.0 * kPi * k * k * 2.0 * omega * a;
    }
    return half * total;
}

double one_particle_norm_sq_analytic(double g, double lambda) {
    return g * g * lambda * lambda * lambda / (6.0 * kPi * kPi);
}

StateExpansion expand_state(const SourceSpec& src, const FieldParams& p) {
    StateExpansion st;
    st.g = src.g;
    st.y0 = src.y0;
    st.m = p.m;
    st.lambda = p.lambda;
    st.order1_norm_sq = one_particle_norm_sq(src, p);
    st.order2_vacuum = complex(-0.5 * st.order1_norm_sq, 0.0);
    return st;
}

double state_norm(const StateExpansion& st) {
    if (!(st.lambda > 0.0)) {
        throw DomainError("state_norm: lambda must be positive");
    }
    return std::norm(st.order0) + (st.order1_norm_sq + 2.0 * st.order2_vacuum.real());
}

ComplexSample one_particle_wavefunction(const SpacetimeInterval& iv, const SourceSpec& src,
                                        const FieldParams& p, const QuadratureSpec& spec,
                                        double eps) {
    if (iv.T() == 0.0) {
        throw DomainError("one_particle_wavefunction: T == 0 (t == y0) is degenerate");
    }
    if (classify(iv, eps) == LightconeClass::Lightlike) {
        throw LightconeBandError("one_particle_wavefunction: point lies in the light-cone band");
    }
    if (iv.T() < 0.0) {
        return {};
    }
    // Psi = \int d^3k alpha(k) u_k(x), u_k = (2 pi)^-3/2 (2 omega)^-1/2 e^{i(k.x - omega T)}.
    // In the (2 pi)^-3 normalisation of the radial integral the weight is
    // (2 pi)^3/2 alpha(k) (2 omega)^-1/2, which is -i times a real function.
    const double t = src.y0 + iv.T();
    const numerics::WeightFunction weight = [&](double k) {
        const double omega = std::sqrt(k * k + p.m * p.m);
        const complex a = alpha_amplitude(k, t, src, p);
        return (kTwoPiPow32 * a / std::sqrt(2.0 * omega) / complex(0.0, -1.0)).real();
    };
    QuadratureSpec inner = spec;
    inner.hard_cutoff = 0.0;
    const ComplexSample projection =
        numerics::radial_momentum_integral(weight, p.m, iv.T(), iv.r(), inner);
    return {complex(0.0, -1.0) * projection.value, projection.err_est};
}

} // namespace lightcone
