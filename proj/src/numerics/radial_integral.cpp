#include "lightcone/numerics/radial_integral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "lightcone/errors.hpp"
#include "lightcone/numerics/acceleration.hpp"
#include "lightcone/numerics/gauss_legendre.hpp"

namespace lightcone::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoPiSquared = 2.0 * std::numbers::pi * std::numbers::pi;
// exp(-k^2/L^2) < 1e-18 beyond this multiple of L.
constexpr double kMollifierReach = 6.5;
constexpr int kMaxAdaptiveDepth = 40;
constexpr std::size_t kHardPanelLimit = 2'000'000;

double omega_power_value(OmegaPower p, double omega) {
    switch (p) {
    case OmegaPower::MinusOne:
        return 1.0 / omega;
    case OmegaPower::MinusHalf:
        return 1.0 / std::sqrt(omega);
    case OmegaPower::Zero:
        return 1.0;
    case OmegaPower::PlusHalf:
        return std::sqrt(omega);
    case OmegaPower::PlusOne:
        return omega;
    }
    return 1.0;
}

// Computes panel integrals of one branch amplitude times exp(i phi(k)).
class PanelEvaluator {
public:
    virtual ~PanelEvaluator() = default;
    virtual void operator()(std::span<const double> edges, std::span<complex> values,
                            std::span<double> l1) const = 0;
};

class FamilyEvaluator final : public PanelEvaluator {
public:
    FamilyEvaluator(const PanelIntegrand& f, double scale, KernelBackend backend)
        : f_(f), scale_(scale), backend_(backend) {}

    void operator()(std::span<const double> edges, std::span<complex> values,
                    std::span<double> l1) const override {
        integrate_panels(f_, edges, values, l1, backend_);
        for (std::size_t j = 0; j < values.size(); ++j) {
            values[j] *= scale_;
            l1[j] *= std::abs(scale_);
        }
    }

private:
    PanelIntegrand f_;
    double scale_;
    KernelBackend backend_;
};

class CallbackEvaluator final : public PanelEvaluator {
public:
    CallbackEvaluator(const WeightFunction& w, double mass, int k_power, double gauss_rate,
                      double phase_k, double phase_T)
        : w_(w), mass_(mass), k_power_(k_power), gauss_rate_(gauss_rate), phase_k_(phase_k),
          phase_T_(phase_T) {}

    void operator()(std::span<const double> edges, std::span<complex> values,
                    std::span<double> l1) const override {
        const GaussRule& gl = gauss_legendre_16();
        for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
            const double centre = 0.5 * (edges[j] + edges[j + 1]);
            const double half = 0.5 * (edges[j + 1] - edges[j]);
            complex sum{};
            double abs_sum = 0.0;
            for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
                const double k = centre + half * gl.nodes[i];
                const double omega = std::sqrt(k * k + mass_ * mass_);
                double amp = gl.weights[i] * w_(k) * std::pow(k, k_power_);
                if (gauss_rate_ > 0.0) {
                    amp *= std::exp(-gauss_rate_ * k * k);
                }
                sum += amp * std::polar(1.0, phase_k_ * k - phase_T_ * omega);
                abs_sum += std::abs(amp);
            }
            values[j] = half * sum;
            l1[j] = std::abs(half) * abs_sum;
        }
    }

private:
    const WeightFunction& w_;
    double mass_;
    int k_power_;
    double gauss_rate_;
    double phase_k_;
    double phase_T_;
};

// Phase phi(k) = a k - T omega(k), written to avoid cancellation when a ~ T.
struct Phase {
    double a;
    double T;
    double mass;

    double omega(double k) const { return std::sqrt(k * k + mass * mass); }
    double omega_minus_k(double k) const {
        return mass == 0.0 ? 0.0 : mass * mass / (omega(k) + k);
    }
    double value(double k) const { return (a - T) * k - T * omega_minus_k(k); }
    double slope(double k) const {
        if (mass == 0.0) {
            return a - T;
        }
        const double w = omega(k);
        return (a - T) + T * mass * mass / (w * (w + k));
    }
    double curvature(double k) const {
        const double w = omega(k);
        return -T * mass * mass / (w * w * w);
    }
    double asymptotic_slope() const { return a - T; }

    // Interior stationary point of phi on (0, inf), or a negative value if none.
    double stationary_point() const {
        if (mass == 0.0 || T == 0.0) {
            return -1.0;
        }
        const double ratio = a / T;
        if (!(ratio > 0.0 && ratio < 1.0)) {
            return -1.0;
        }
        return mass * ratio / std::sqrt((1.0 - ratio) * (1.0 + ratio));
    }
};

// Yields breakpoints 0 = k_0 < k_1 < ... where the phase advances by pi,
// with the stationary point (if any) inserted as a breakpoint. Panels longer
// than max_length are split evenly.
class PanelGenerator {
public:
    PanelGenerator(const Phase& phase, double max_length,
                   double limit = std::numeric_limits<double>::infinity())
        : phase_(phase), max_length_(max_length), limit_(limit) {
        flat_ = phase_.asymptotic_slope() == 0.0 && (phase_.mass == 0.0 || phase_.T == 0.0);
        if (flat_ && !std::isfinite(std::min(max_length_, limit_))) {
            throw LightconeBandError("radial integral: constant phase needs a finite k-range");
        }
        if (flat_) {
            max_length_ = std::min(max_length_, limit_ / 64.0);
        }
        stationary_ = phase_.stationary_point();
        if (stationary_ > 0.0) {
            direction_ = phase_.value(stationary_) > phase_.value(0.0) ? 1.0 : -1.0;
            piece_end_ = stationary_;
        } else {
            direction_ = phase_.asymptotic_slope() > 0.0 ? 1.0 : -1.0;
            piece_end_ = std::numeric_limits<double>::infinity();
        }
        level_ = phase_.value(0.0);
    }

    // Start of the monotone semi-infinite tail.
    double tail_start() const { return stationary_ > 0.0 ? stationary_ : 0.0; }

    double current() const { return current_; }

    double next() {
        if (pending_ > 0) {
            --pending_;
            current_ += split_step_;
            if (pending_ == 0) {
                current_ = split_end_;
            }
            return current_;
        }
        const double target = flat_ ? current_ + max_length_ : advance_level();
        if (target - current_ > max_length_) {
            const int parts = static_cast<int>(std::ceil((target - current_) / max_length_));
            split_step_ = (target - current_) / parts;
            split_end_ = target;
            pending_ = parts - 1;
            current_ += split_step_;
            return current_;
        }
        current_ = target;
        return current_;
    }

private:
    double advance_level() {
        level_ += direction_ * std::numbers::pi;
        const double lo = current_;
        if (std::isfinite(piece_end_)) {
            const bool beyond = direction_ * (level_ - phase_.value(piece_end_)) >= 0.0;
            if (beyond) {
                const double end = piece_end_;
                level_ = phase_.value(end);
                direction_ = phase_.asymptotic_slope() > 0.0 ? 1.0 : -1.0;
                piece_end_ = std::numeric_limits<double>::infinity();
                return end;
            }
            return solve(lo, piece_end_);
        }
        // Bracket on the unbounded monotone piece.
        double slope = std::abs(phase_.slope(lo));
        double step;
        if (slope > 1e-8 * std::abs(phase_.asymptotic_slope())) {
            step = std::numbers::pi / std::max(slope, std::abs(phase_.asymptotic_slope()));
        } else {
            step = std::sqrt(2.0 * std::numbers::pi / std::max(std::abs(phase_.curvature(lo)), 1e-300));
        }
        double hi = lo + step;
        while (direction_ * (phase_.value(hi) - level_) < 0.0) {
            if (hi >= limit_) {
                return limit_;
            }
            hi = lo + 2.0 * (hi - lo);
        }
        return solve(lo, hi);
    }

    // phi(k) = level_ on [lo, hi], phi monotone there with the right bracket.
    double solve(double lo, double hi) const {
        double x = 0.5 * (lo + hi);
        for (int iter = 0; iter < 200; ++iter) {
            const double f = phase_.value(x) - level_;
            if (direction_ * f < 0.0) {
                lo = x;
            } else {
                hi = x;
            }
            const double d = phase_.slope(x);
            double candidate = d != 0.0 ? x - f / d : 0.5 * (lo + hi);
            if (!(candidate > lo && candidate < hi)) {
                candidate = 0.5 * (lo + hi);
            }
            if (std::abs(candidate - x) <= 4.0 * kEps * std::max(1.0, std::abs(x)) ||
                hi - lo <= 4.0 * kEps * std::max(1.0, hi)) {
                return candidate;
            }
            x = candidate;
        }
        return x;
    }

    Phase phase_;
    double max_length_;
    double limit_;
    bool flat_ = false;
    double stationary_ = -1.0;
    double direction_ = 1.0;
    double piece_end_;
    double level_;
    double current_ = 0.0;
    int pending_ = 0;
    double split_step_ = 0.0;
    double split_end_ = 0.0;
};

struct PanelSum {
    complex value{};
    double l1 = 0.0;
    double err = 0.0;
};

PanelSum integrate_adaptive(const PanelEvaluator& eval, double lo, double hi, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double edges3[3] = {lo, mid, hi};
    const double edges2[2] = {lo, hi};
    complex halves[2];
    double halves_l1[2];
    complex whole[1];
    double whole_l1[1];
    eval(edges3, halves, halves_l1);
    eval(edges2, whole, whole_l1);
    const complex refined = halves[0] + halves[1];
    const double l1 = halves_l1[0] + halves_l1[1];
    const double diff = std::abs(refined - whole[0]);
    if (diff <= 1e-14 * l1 || depth >= kMaxAdaptiveDepth) {
        return {refined, l1, depth >= kMaxAdaptiveDepth ? diff : 0.0};
    }
    const PanelSum left = integrate_adaptive(eval, lo, mid, depth + 1);
    const PanelSum right = integrate_adaptive(eval, mid, hi, depth + 1);
    return {left.value + right.value, left.l1 + right.l1, left.err + right.err};
}

// Panels whose left edge is this close to the origin (relative to their
// length), or adjacent to a stationary point, get adaptive treatment.
bool needs_refinement(double lo, double hi, double stationary) {
    if (lo < 4.0 * (hi - lo)) {
        return true;
    }
    return stationary > 0.0 && (std::abs(lo - stationary) < 1e-12 * std::max(1.0, stationary) ||
                                std::abs(hi - stationary) < 1e-12 * std::max(1.0, stationary));
}

// Sums the panels delivered by `gen` over [from, to). Used for finite ranges.
PanelSum integrate_range(const PanelEvaluator& eval, PanelGenerator& gen, double to,
                         double stationary) {
    PanelSum total;
    long double re = 0.0L;
    long double im = 0.0L;
    std::size_t count = 0;
    double lo = gen.current();
    while (lo < to) {
        double hi = std::min(gen.next(), to);
        PanelSum panel;
        if (needs_refinement(lo, hi, stationary)) {
            panel = integrate_adaptive(eval, lo, hi, 0);
        } else {
            const double edges[2] = {lo, hi};
            complex v[1];
            double l[1];
            eval(edges, v, l);
            panel = {v[0], l[0], 0.0};
        }
        re += panel.value.real();
        im += panel.value.imag();
        total.l1 += panel.l1;
        total.err += panel.err;
        lo = hi;
        if (++count > kHardPanelLimit) {
            throw ConvergenceError("radial integral: panel limit exceeded on a finite range");
        }
    }
    total.value = complex(static_cast<double>(re), static_cast<double>(im));
    return total;
}

// Abel limit of \int_0^inf f(k) exp(i phi(k)) dk by half-period panels and
// epsilon acceleration of the partial sums over the monotone tail.
ComplexSample accelerate_branch(const PanelEvaluator& eval, const Phase& phase, double abs_tol,
                                double rel_tol, const QuadratureSpec& spec) {
    const double freq = std::abs(phase.asymptotic_slope());
    if (freq <= 1e-13 * std::max({1.0, std::abs(phase.a), std::abs(phase.T)})) {
        throw LightconeBandError("radial integral: zero asymptotic frequency (on the light cone)");
    }
    PanelGenerator gen(phase, std::numeric_limits<double>::infinity());
    const double stationary = phase.stationary_point();

    PanelSum head;
    if (stationary > 0.0) {
        head = integrate_range(eval, gen, stationary, stationary);
    }

    const int order = spec.accel_order;
    const std::size_t window = static_cast<std::size_t>(2 * order + 2);
    std::vector<complex> sums;
    sums.reserve(static_cast<std::size_t>(spec.max_panels) + 1);
    long double re = head.value.real();
    long double im = head.value.imag();
    sums.push_back(head.value);
    double max_abs = std::abs(head.value);
    double max_l1 = head.l1;
    double refine_err = head.err;

    complex prev_estimate{};
    double prev_diff = std::numeric_limits<double>::infinity();
    bool have_prev = false;

    constexpr int kBatch = 8;
    std::vector<double> edges;
    std::vector<complex> values(kBatch);
    std::vector<double> l1(kBatch);
    double lo = gen.current();
    int panels = 0;
    while (panels < spec.max_panels) {
        edges.clear();
        edges.push_back(lo);
        for (int b = 0; b < kBatch; ++b) {
            edges.push_back(gen.next());
        }
        eval(edges, values, l1);
        for (int b = 0; b < kBatch; ++b) {
            if (needs_refinement(edges[b], edges[b + 1], stationary)) {
                const PanelSum refined = integrate_adaptive(eval, edges[b], edges[b + 1], 0);
                values[b] = refined.value;
                l1[b] = refined.l1;
                refine_err += refined.err;
            }
        }
        lo = edges.back();

        for (int b = 0; b < kBatch; ++b) {
            re += values[b].real();
            im += values[b].imag();
            const complex s(static_cast<double>(re), static_cast<double>(im));
            sums.push_back(s);
            max_abs = std::max(max_abs, std::abs(s));
            max_l1 = std::max(max_l1, l1[b]);
            ++panels;
            if (sums.size() < window) {
                continue;
            }
            ComplexSample est;
            try {
                est = accelerate(std::span<const complex>(sums).last(window), order);
            } catch (const ConvergenceError&) {
                have_prev = false;
                continue;
            }
            if (!have_prev) {
                prev_estimate = est.value;
                have_prev = true;
                continue;
            }
            const double diff = std::abs(est.value - prev_estimate);
            const double floor = 64.0 * kEps * (max_abs + max_l1) + refine_err;
            const double tol = std::max({abs_tol, rel_tol * std::abs(est.value), floor});
            if (diff <= tol && prev_diff <= tol) {
                return {est.value, std::max({diff, prev_diff, floor})};
            }
            prev_diff = diff;
            prev_estimate = est.value;
        }
    }
    throw ConvergenceError("radial integral: acceleration did not converge within " +
                           std::to_string(spec.max_panels) + " panels");
}

// Plain panel sum truncated at `cutoff` (hard cutoff or mollifier reach).
ComplexSample truncated_branch(const PanelEvaluator& eval, const Phase& phase, double cutoff,
                               double max_length) {
    PanelGenerator gen(phase, max_length, cutoff);
    const PanelSum s = integrate_range(eval, gen, cutoff, phase.stationary_point());
    return {s.value, 64.0 * kEps * s.l1 + s.err};
}

// Geometry of the radial reduction: up to two exponential branches
//   result = sum_b coeff_b \int_0^inf k^k_power w(k) exp(i(a_b k - T omega)) dk.
struct BranchPlan {
    int k_power;
    int count;
    double a[2];
    complex coeff[2];
};

BranchPlan plan_for(double r) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw DomainError("radial integral: r must be finite and >= 0");
    }
    if (r < kRadialLimitThreshold) {
        return {2, 1, {0.0, 0.0}, {complex(1.0 / kTwoPiSquared, 0.0), complex{}}};
    }
    // sin(kr) = (e^{ikr} - e^{-ikr}) / (2i)
    const complex c = 1.0 / (kTwoPiSquared * r) / complex(0.0, 2.0);
    return {1, 2, {r, -r}, {c, -c}};
}

template <typename MakeEvaluator>
ComplexSample run_accelerated(MakeEvaluator make, double mass, double T, double r,
                              const QuadratureSpec& spec) {
    const BranchPlan plan = plan_for(r);
    ComplexSample out;
    for (int b = 0; b < plan.count; ++b) {
        const Phase phase{plan.a[b], T, mass};
        const auto eval = make(plan.k_power, 0.0, plan.a[b]);
        const double scale = std::abs(plan.coeff[b]);
        const ComplexSample part = accelerate_branch(*eval, phase, spec.abs_tol / scale,
                                                     spec.rel_tol, spec);
        out.value += plan.coeff[b] * part.value;
        out.err_est += scale * part.err_est;
    }
    return out;
}

template <typename MakeEvaluator>
ComplexSample run_cutoff(MakeEvaluator make, double mass, double T, double r,
                         const QuadratureSpec& spec) {
    const BranchPlan plan = plan_for(r);
    ComplexSample out;
    for (int b = 0; b < plan.count; ++b) {
        const Phase phase{plan.a[b], T, mass};
        const auto eval = make(plan.k_power, 0.0, plan.a[b]);
        const ComplexSample part = truncated_branch(*eval, phase, spec.hard_cutoff,
                                                    std::numeric_limits<double>::infinity());
        out.value += plan.coeff[b] * part.value;
        out.err_est += std::abs(plan.coeff[b]) * part.err_est;
    }
    return out;
}

// Weights with a gaussian factor decay on their own: a plain panel sum out to
// where exp(-rate k^2) < 1e-20 suffices, whatever the phase.
template <typename MakeEvaluator>
ComplexSample run_decaying(MakeEvaluator make, double mass, double T, double r, double rate) {
    const BranchPlan plan = plan_for(r);
    const double reach = std::sqrt(46.0 / rate);
    const double max_length = 0.5 / std::sqrt(rate);
    ComplexSample out;
    for (int b = 0; b < plan.count; ++b) {
        const Phase phase{plan.a[b], T, mass};
        const auto eval = make(plan.k_power, 0.0, plan.a[b]);
        const ComplexSample part = truncated_branch(*eval, phase, reach, max_length);
        out.value += plan.coeff[b] * part.value;
        out.err_est += std::abs(plan.coeff[b]) * part.err_est;
    }
    return out;
}

template <typename MakeEvaluator>
ComplexSample run_mollified(MakeEvaluator make, double mass, double T, double r,
                            const QuadratureSpec& spec) {
    const auto& widths = spec.mollifier_widths;
    if (widths.size() < 2) {
        throw ConfigError("mollified path needs at least two mollifier widths");
    }
    const BranchPlan plan = plan_for(r);
    std::vector<double> x;
    std::vector<complex> y;
    double noise = 0.0;
    for (double width : widths) {
        const double rate = 1.0 / (width * width);
        complex total{};
        for (int b = 0; b < plan.count; ++b) {
            const Phase phase{plan.a[b], T, mass};
            const auto eval = make(plan.k_power, rate, plan.a[b]);
            const ComplexSample part =
                truncated_branch(*eval, phase, kMollifierReach * width, 0.5 * width);
            total += plan.coeff[b] * part.value;
            noise = std::max(noise, std::abs(plan.coeff[b]) * part.err_est);
        }
        x.push_back(rate);
        y.push_back(total);
    }
    ComplexSample out = extrapolate_to_zero(x, y);
    out.err_est += noise;
    return out;
}

double tolerance_for(const ComplexSample& s, const QuadratureSpec& spec) {
    return std::max(spec.abs_tol, spec.rel_tol * std::abs(s.value));
}

template <typename MakeEvaluator>
ComplexSample run_default(MakeEvaluator make, double mass, double T, double r,
                          const QuadratureSpec& spec) {
    spec.validate();
    if (spec.hard_cutoff > 0.0) {
        return run_cutoff(make, mass, T, r, spec);
    }
    try {
        return run_accelerated(make, mass, T, r, spec);
    } catch (const ConvergenceError&) {
        if (spec.mollifier_widths.size() < 2) {
            throw;
        }
    }
    const ComplexSample fallback = run_mollified(make, mass, T, r, spec);
    if (fallback.err_est > tolerance_for(fallback, spec)) {
        throw ConvergenceError("radial integral: acceleration failed and mollifier "
                               "extrapolation residual " +
                               std::to_string(fallback.err_est) + " exceeds tolerance");
    }
    return fallback;
}

auto family_maker(const MomentumWeight& w, double T, KernelBackend backend) {
    return [w, T, backend](int k_power, double extra_rate, double a) {
        const PanelIntegrand f{w.mass, w.power, k_power, w.gauss_rate + extra_rate, a, T};
        return std::make_unique<FamilyEvaluator>(f, w.scale, backend);
    };
}

auto callback_maker(const WeightFunction& w, double mass, double T) {
    return [&w, mass, T](int k_power, double extra_rate, double a) {
        return std::make_unique<CallbackEvaluator>(w, mass, k_power, extra_rate, a, T);
    };
}

void check_inputs(double mass, double T) {
    if (!(mass >= 0.0) || !std::isfinite(mass)) {
        throw DomainError("radial integral: mass must be finite and >= 0");
    }
    if (!std::isfinite(T)) {
        throw DomainError("radial integral: T must be finite");
    }
}

} // namespace

double MomentumWeight::operator()(double k) const {
    const double omega = std::sqrt(k * k + mass * mass);
    double v = scale * omega_power_value(power, omega);
    if (gauss_rate > 0.0) {
        v *= std::exp(-gauss_rate * k * k);
    }
    return v;
}

MomentumWeight MomentumWeight::inverse_two_omega(double mass) {
    return {mass, 0.5, OmegaPower::MinusOne, 0.0};
}

MomentumWeight MomentumWeight::inverse_sqrt_two_omega(double mass) {
    return {mass, std::numbers::sqrt2 / 2.0, OmegaPower::MinusHalf, 0.0};
}

MomentumWeight MomentumWeight::gaussian(double mass, double rate) {
    return {mass, 1.0, OmegaPower::Zero, rate};
}

ComplexSample extrapolate_to_zero(std::span<const double> x, std::span<const complex> y) {
    const std::size_t n = x.size();
    if (n == 0 || y.size() != n) {
        throw DomainError("extrapolate_to_zero: need matching nonempty samples");
    }
    std::vector<complex> p(y.begin(), y.end());
    if (n == 1) {
        return {p[0], std::abs(p[0])};
    }
    // Interpolant through the first n-1 points, for the error estimate.
    complex previous = y[0];
    // After pass `level`, p[i] is the interpolant through points i-level..i at 0.
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const double xa = x[i - level];
            const double xb = x[i];
            p[i] = (p[i] * xa - p[i - 1] * xb) / (xa - xb);
        }
        if (level == n - 2) {
            previous = p[n - 2];
        }
    }
    return {p[n - 1], std::abs(p[n - 1] - previous)};
}

ComplexSample radial_momentum_integral(const MomentumWeight& weight, double T, double r,
                                       const QuadratureSpec& spec) {
    check_inputs(weight.mass, T);
    if (weight.gauss_rate > 0.0 && spec.hard_cutoff == 0.0) {
        spec.validate();
        return run_decaying(family_maker(weight, T, spec.backend), weight.mass, T, r,
                            weight.gauss_rate);
    }
    return run_default(family_maker(weight, T, spec.backend), weight.mass, T, r, spec);
}

ComplexSample radial_momentum_integral(const WeightFunction& weight, double mass, double T,
                                       double r, const QuadratureSpec& spec) {
    check_inputs(mass, T);
    return run_default(callback_maker(weight, mass, T), mass, T, r, spec);
}

ComplexSample radial_momentum_integral_accelerated(const MomentumWeight& weight, double T,
                                                   double r, const QuadratureSpec& spec) {
    check_inputs(weight.mass, T);
    spec.validate();
    return run_accelerated(family_maker(weight, T, spec.backend), weight.mass, T, r, spec);
}

ComplexSample radial_momentum_integral_accelerated(const WeightFunction& weight, double mass,
                                                   double T, double r,
                                                   const QuadratureSpec& spec) {
    check_inputs(mass, T);
    spec.validate();
    return run_accelerated(callback_maker(weight, mass, T), mass, T, r, spec);
}

ComplexSample radial_momentum_integral_mollified(const MomentumWeight& weight, double T,
                                                 double r, const QuadratureSpec& spec) {
    check_inputs(weight.mass, T);
    spec.validate();
    return run_mollified(family_maker(weight, T, spec.backend), weight.mass, T, r, spec);
}

ComplexSample radial_momentum_integral_mollified(const WeightFunction& weight, double mass,
                                                 double T, double r, const QuadratureSpec& spec) {
    check_inputs(mass, T);
    spec.validate();
    return run_mollified(callback_maker(weight, mass, T), mass, T, r, spec);
}

} // namespace lightcone::numerics
