#include "lightcone/causality_lab.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

#include "lightcone/errors.hpp"

namespace lightcone {

namespace {

struct ObservableName {
    Observable o;
    const char* name;
};

constexpr std::array kNames{
    ObservableName{Observable::Field, "field"},
    ObservableName{Observable::IntensitySource, "intensity_source"},
    ObservableName{Observable::EnergySource, "energy_source"},
    ObservableName{Observable::NwDensity, "nw_density"},
    ObservableName{Observable::GlauberDensity, "glauber_density"},
    ObservableName{Observable::TruncatedIntensity, "truncated_intensity"},
    ObservableName{Observable::CommutatorField, "commutator_field"},
    ObservableName{Observable::CommutatorNw, "commutator_nw"},
    ObservableName{Observable::CommutatorGlauber, "commutator_glauber"},
    ObservableName{Observable::Wightman, "wightman"},
    ObservableName{Observable::DeltaPlus, "delta_plus"},
    ObservableName{Observable::Delta, "delta"},
    ObservableName{Observable::DeltaRet, "delta_ret"},
    ObservableName{Observable::OneParticleWavefunction, "one_particle_wavefunction"},
    ObservableName{Observable::NwWavefunction, "nw_wavefunction"},
};

constexpr std::array kAll{
    Observable::Field,           Observable::IntensitySource,
    Observable::EnergySource,    Observable::NwDensity,
    Observable::GlauberDensity,  Observable::TruncatedIntensity,
    Observable::CommutatorField, Observable::CommutatorNw,
    Observable::CommutatorGlauber, Observable::Wightman,
    Observable::DeltaPlus,       Observable::Delta,
    Observable::DeltaRet,        Observable::OneParticleWavefunction,
    Observable::NwWavefunction,
};

constexpr std::size_t kVerdictCount = 9;

void fill(PointRecord& rec, const ComplexSample& s) {
    rec.value = s.value;
    rec.err_est = s.err_est;
}

void fill_real(PointRecord& rec, double v, double err) {
    rec.value = complex(v, 0.0);
    rec.err_est = err;
}

// Largest of the magnitudes, with the error of the one that was picked.
void fill_max(PointRecord& rec, const ComplexSample& a, const ComplexSample& b) {
    const ComplexSample& pick = std::abs(a.value) >= std::abs(b.value) ? a : b;
    fill_real(rec, std::abs(pick.value), pick.err_est);
}

double band_shell(Observable o, const SpacetimeInterval& iv, const FieldParams& p,
                  const SourceSpec& src, const QuadratureSpec& spec, double eps) {
    switch (o) {
    case Observable::Field:
        return src.g * delta_ret(iv, p, spec, eps).shell;
    case Observable::Delta:
        return delta(iv, p, spec, eps).shell;
    case Observable::DeltaRet:
        return delta_ret(iv, p, spec, eps).shell;
    default:
        return 0.0;
    }
}

} // namespace

double AxisRange::at(int i) const {
    if (i == count - 1) {
        return max;
    }
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void GridSpec::validate() const {
    for (const AxisRange* a : {&T_range, &r_range}) {
        if (!(a->min < a->max) || a->count < 2 || !std::isfinite(a->min) ||
            !std::isfinite(a->max)) {
            throw ConfigError("grid: each axis needs min < max and count >= 2");
        }
    }
    if (r_range.min < 0.0) {
        throw ConfigError("grid: r must be >= 0");
    }
    if (!(band_eps >= 0.0)) {
        throw ConfigError("grid: band_eps must be >= 0");
    }
    field().validate();
}

Observable parse_observable(std::string_view id) {
    for (const auto& n : kNames) {
        if (id == n.name) {
            return n.o;
        }
    }
    throw ConfigError("unknown observable '" + std::string(id) + "'");
}

const char* to_string(Observable o) {
    for (const auto& n : kNames) {
        if (n.o == o) {
            return n.name;
        }
    }
    return "?";
}

std::span<const Observable> all_observables() { return kAll; }

std::span<const Observable> leakage_observables() {
    return std::span<const Observable>(kAll).first(kVerdictCount);
}

bool has_verdict(Observable o) {
    const auto v = leakage_observables();
    return std::find(v.begin(), v.end(), o) != v.end();
}

bool is_source_dependent(Observable o) {
    switch (o) {
    case Observable::Field:
    case Observable::IntensitySource:
    case Observable::EnergySource:
    case Observable::NwDensity:
    case Observable::GlauberDensity:
    case Observable::TruncatedIntensity:
    case Observable::DeltaRet:
    case Observable::OneParticleWavefunction:
        return true;
    default:
        return false;
    }
}

const char* to_string(Verdict v) { return v == Verdict::Causal ? "Causal" : "NonCausal"; }

const char* to_string(DecayModel m) { return m == DecayModel::ExpSqrt ? "ExpSqrt" : "PowerLaw"; }

PointRecord evaluate_observable(Observable o, const SpacetimeInterval& iv, const FieldParams& p,
                                const SourceSpec& src, const QuadratureSpec& spec, double eps) {
    PointRecord rec;
    rec.T = iv.T();
    rec.r = iv.r();
    rec.cls = classify(iv, eps);
    if (iv.T() < 0.0 && is_source_dependent(o)) {
        rec.evaluated = true;
        return rec;
    }
    if (rec.cls == LightconeClass::Lightlike) {
        rec.shell = band_shell(o, iv, p, src, spec, eps);
        return rec;
    }
    try {
        switch (o) {
        case Observable::Field:
            fill(rec, field_expectation(iv, src, p, spec, eps));
            break;
        case Observable::IntensitySource: {
            const SplitExpectation s = intensity_expectation(iv, src, p, spec, eps);
            fill_real(rec, s.source, s.err_est);
            break;
        }
        case Observable::EnergySource: {
            const SplitExpectation s = energy_density_expectation(iv, src, p, spec, eps);
            fill_real(rec, s.source, s.err_est);
            break;
        }
        case Observable::NwDensity:
            fill(rec, nw_density(iv, src, p, spec, eps));
            break;
        case Observable::GlauberDensity:
            fill(rec, glauber_density(iv, src, p, spec, eps));
            break;
        case Observable::TruncatedIntensity:
            fill(rec, truncated_intensity(iv, src, p, spec, eps, false));
            break;
        case Observable::CommutatorField: {
            const PropagatorValue d = delta(iv, p, spec, eps);
            fill_real(rec, std::abs(d.smooth), d.err_est);
            break;
        }
        case Observable::CommutatorNw:
            fill_max(rec, d_dt(PropagatorFn::DeltaPlus, iv, p, spec, eps),
                     d_dt(PropagatorFn::DeltaMinus, iv, p, spec, eps));
            break;
        case Observable::CommutatorGlauber:
            fill_max(rec, delta_plus(iv, p, spec, eps), delta_minus(iv, p, spec, eps));
            break;
        case Observable::Wightman:
            fill(rec, wightman(iv, p, spec, WightmanPath::Auto, eps));
            break;
        case Observable::DeltaPlus:
            fill(rec, delta_plus(iv, p, spec, eps));
            break;
        case Observable::Delta: {
            const PropagatorValue d = delta(iv, p, spec, eps);
            rec.value = d.smooth;
            rec.err_est = d.err_est;
            break;
        }
        case Observable::DeltaRet: {
            const PropagatorValue d = delta_ret(iv, p, spec, eps);
            rec.value = d.smooth;
            rec.err_est = d.err_est;
            break;
        }
        case Observable::OneParticleWavefunction:
            fill(rec, one_particle_wavefunction(iv, src, p, spec, eps));
            break;
        case Observable::NwWavefunction:
            fill(rec, nw_wavefunction(iv, p, spec, eps));
            break;
        }
    } catch (const LightconeBandError&) {
        // Difference stencil reached into the band.
        rec.value = {};
        rec.err_est = 0.0;
        return rec;
    }
    rec.evaluated = true;
    return rec;
}

std::vector<PointRecord> scan_grid(Observable o, const GridSpec& grid, const QuadratureSpec& spec,
                                   int workers) {
    grid.validate();
    spec.validate();
    const FieldParams p = grid.field();
    const SourceSpec src = grid.source();
    const std::size_t nT = static_cast<std::size_t>(grid.T_range.count);
    const std::size_t nr = static_cast<std::size_t>(grid.r_range.count);
    const std::size_t total = nT * nr;
    std::vector<PointRecord> out(total);

    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t failed_index = total;
    std::exception_ptr failure;

    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total) {
                return;
            }
            const double T = grid.T_range.at(static_cast<int>(i / nr));
            const double r = grid.r_range.at(static_cast<int>(i % nr));
            try {
                out[i] = evaluate_observable(o, SpacetimeInterval(T, r), p, src, spec,
                                             grid.band_eps);
            } catch (...) {
                std::lock_guard lock(mu);
                // Keep the failure of the lowest index so the error is reproducible.
                if (i < failed_index) {
                    failed_index = i;
                    failure = std::current_exception();
                }
            }
        }
    };

    unsigned n = workers > 0 ? static_cast<unsigned>(workers) : std::thread::hardware_concurrency();
    n = std::clamp<unsigned>(n, 1u, static_cast<unsigned>(total));
    if (n == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

LeakageReport summarize_leakage(Observable o, std::span<const PointRecord> points,
                                const LeakageThresholds& th) {
    LeakageReport rep;
    rep.observable_id = to_string(o);
    rep.floor = th.floor;
    rep.n_points = static_cast<int>(points.size());
    for (const PointRecord& pt : points) {
        if (!pt.evaluated) {
            ++rep.n_band;
            continue;
        }
        const double mag = std::abs(pt.value);
        if (pt.cls == LightconeClass::Spacelike) {
            ++rep.n_spacelike;
            rep.spacelike_max = std::max(rep.spacelike_max, mag);
        } else if (pt.cls == LightconeClass::Timelike) {
            ++rep.n_timelike;
            rep.timelike_max = std::max(rep.timelike_max, mag);
        }
    }
    rep.leakage_ratio = rep.spacelike_max / std::max(rep.timelike_max, th.floor);
    rep.vacuous = rep.spacelike_max <= th.floor && rep.timelike_max <= th.floor;
    rep.verdict = rep.leakage_ratio <= th.causal_threshold || rep.vacuous ? Verdict::Causal
                                                                          : Verdict::NonCausal;
    return rep;
}

LeakageReport leakage_scan(Observable o, const GridSpec& grid, const QuadratureSpec& spec,
                           const LeakageThresholds& th, int workers) {
    if (!has_verdict(o)) {
        throw ConfigError(std::string("observable '") + to_string(o) +
                          "' has no causality verdict");
    }
    const std::vector<PointRecord> pts = scan_grid(o, grid, spec, workers);
    return summarize_leakage(o, pts, th);
}

DecayFit decay_fit(std::span<const std::pair<double, double>> samples, DecayModel model) {
    if (samples.size() < 5) {
        throw DomainError("decay_fit: needs at least 5 samples");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    DecayFit fit;
    fit.model = model;
    fit.n = static_cast<int>(samples.size());
    fit.window_min = std::numeric_limits<double>::infinity();
    fit.window_max = -std::numeric_limits<double>::infinity();
    for (const auto& [x, v] : samples) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw DomainError("decay_fit: values must be positive");
        }
        if (model == DecayModel::PowerLaw && !(x > 0.0)) {
            throw DomainError("decay_fit: power-law abscissae must be positive");
        }
        xs.push_back(model == DecayModel::PowerLaw ? std::log(x) : x);
        ys.push_back(std::log(v));
        fit.window_min = std::min(fit.window_min, x);
        fit.window_max = std::max(fit.window_max, x);
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (!(sxx > 0.0)) {
        throw DomainError("decay_fit: abscissae must not all coincide");
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (intercept + slope * xs[i]);
        ss_res += e * e;
    }
    fit.exponent = -slope;
    fit.std_error = std::sqrt(ss_res / (n - 2.0) / sxx);
    fit.r2 = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

FitTarget parse_fit_target(std::string_view id) {
    if (id == "nw_spacelike") return FitTarget::NwSpacelike;
    if (id == "nw_timelike_phase") return FitTarget::NwTimelikePhase;
    if (id == "vacuum_powerlaw") return FitTarget::VacuumPowerlaw;
    if (id == "wightman_spacelike") return FitTarget::WightmanSpacelike;
    throw ConfigError("unknown fit target '" + std::string(id) + "'");
}

const char* to_string(FitTarget t) {
    switch (t) {
    case FitTarget::NwSpacelike:
        return "nw_spacelike";
    case FitTarget::NwTimelikePhase:
        return "nw_timelike_phase";
    case FitTarget::VacuumPowerlaw:
        return "vacuum_powerlaw";
    case FitTarget::WightmanSpacelike:
        return "wightman_spacelike";
    }
    return "?";
}

namespace {

QuadratureSpec fit_spec(const QuadratureSpec& spec) {
    QuadratureSpec s = spec;
    s.abs_tol = std::min(s.abs_tol, 1e-16);
    s.rel_tol = std::min(s.rel_tol, 1e-10);
    return s;
}

FitReport fit_nw_spacelike(const FieldParams& p, const QuadratureSpec& spec) {
    constexpr double T = 1.0;
    constexpr int n = 41;
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < n; ++i) {
        const double r = 3.0 + 4.0 * i / (n - 1);
        const ComplexSample psi = nw_wavefunction({T, r}, p, spec);
        const double envelope = p.m * std::sqrt(T) / (r * r - T * T);
        samples.emplace_back(std::sqrt(r * r - T * T), std::abs(psi.value) / envelope);
    }
    FitReport rep;
    rep.target = FitTarget::NwSpacelike;
    rep.fit = decay_fit(samples, DecayModel::ExpSqrt);
    rep.expected = p.m;
    rep.measured = rep.fit->exponent;
    rep.tolerance = 0.05;
    rep.pass = std::abs(rep.measured - rep.expected) <= rep.tolerance * rep.expected;
    return rep;
}

FitReport fit_nw_timelike_phase(const FieldParams& p, const QuadratureSpec& spec) {
    constexpr double r = 1.0;
    constexpr int n = 101;
    constexpr double tail_start = 5.5;
    FitReport rep;
    rep.target = FitTarget::NwTimelikePhase;
    double prev_T = 0.0;
    double prev_arg = 0.0;
    for (int i = 0; i < n; ++i) {
        const double T = 3.0 + 5.0 * i / (n - 1);
        const double arg = std::arg(nw_wavefunction({T, r}, p, spec).value);
        if (i > 0) {
            double d = arg - prev_arg;
            d -= 2.0 * std::numbers::pi * std::round(d / (2.0 * std::numbers::pi));
            PhaseSample s;
            s.T = 0.5 * (T + prev_T);
            s.derivative = d / (T - prev_T);
            s.expected = -p.m * s.T / std::sqrt(s.T * s.T - r * r);
            s.rel_dev = std::abs(s.derivative - s.expected) / std::abs(s.expected);
            rep.phase.push_back(s);
        }
        prev_T = T;
        prev_arg = arg;
    }
    rep.tolerance = 0.05;
    for (const PhaseSample& s : rep.phase) {
        if (s.T >= tail_start) {
            rep.measured = std::max(rep.measured, s.rel_dev);
        }
    }
    rep.pass = rep.measured <= rep.tolerance &&
               rep.phase.back().rel_dev < rep.phase.front().rel_dev;
    return rep;
}

FitReport fit_vacuum_powerlaw(const FieldParams& p, const QuadratureSpec& spec) {
    const FieldParams massless{0.0, p.g, p.lambda};
    constexpr int n = 41;
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < n; ++i) {
        const double rho = 0.5 * std::pow(10.0, static_cast<double>(i) / (n - 1));
        const ComplexSample w = wightman({0.0, rho}, massless, spec, WightmanPath::Quadrature);
        samples.emplace_back(rho, w.value.real());
    }
    FitReport rep;
    rep.target = FitTarget::VacuumPowerlaw;
    rep.fit = decay_fit(samples, DecayModel::PowerLaw);
    rep.expected = 2.0;
    rep.measured = rep.fit->exponent;
    rep.tolerance = 0.02;
    rep.relative_tolerance = false;
    rep.pass = std::abs(rep.measured - rep.expected) <= rep.tolerance;
    return rep;
}

FitReport fit_wightman_spacelike(const FieldParams& p, const QuadratureSpec& spec) {
    constexpr double T = 0.5;
    constexpr int n = 41;
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < n; ++i) {
        const double s = 4.0 + 8.0 * i / (n - 1);
        const double r = std::sqrt(s * s + T * T);
        const ComplexSample w = wightman({T, r}, p, spec, WightmanPath::Quadrature);
        samples.emplace_back(s, w.value.real() * std::pow(s, 1.5));
    }
    FitReport rep;
    rep.target = FitTarget::WightmanSpacelike;
    rep.fit = decay_fit(samples, DecayModel::ExpSqrt);
    rep.expected = p.m;
    rep.measured = rep.fit->exponent;
    rep.tolerance = 0.02;
    rep.pass = std::abs(rep.measured - rep.expected) <= rep.tolerance * rep.expected;
    return rep;
}

} // namespace

FitReport run_fit(FitTarget target, const FieldParams& p, const QuadratureSpec& spec) {
    p.validate();
    spec.validate();
    if (target != FitTarget::VacuumPowerlaw && !(p.m > 0.0)) {
        throw DomainError(std::string("fit ") + to_string(target) + ": requires m > 0");
    }
    const QuadratureSpec s = fit_spec(spec);
    switch (target) {
    case FitTarget::NwSpacelike:
        return fit_nw_spacelike(p, s);
    case FitTarget::NwTimelikePhase:
        return fit_nw_timelike_phase(p, s);
    case FitTarget::VacuumPowerlaw:
        return fit_vacuum_powerlaw(p, s);
    case FitTarget::WightmanSpacelike:
        return fit_wightman_spacelike(p, s);
    }
    throw ConfigError("unknown fit target");
}

Verdict expected_verdict(Observable o) {
    switch (o) {
    case Observable::Field:
    case Observable::IntensitySource:
    case Observable::EnergySource:
    case Observable::CommutatorField:
        return Verdict::Causal;
    case Observable::NwDensity:
    case Observable::GlauberDensity:
    case Observable::TruncatedIntensity:
    case Observable::CommutatorNw:
    case Observable::CommutatorGlauber:
        return Verdict::NonCausal;
    default:
        throw ConfigError(std::string("observable '") + to_string(o) +
                          "' has no causality verdict");
    }
}

VerdictTable verdict_table(const GridSpec& grid, const QuadratureSpec& spec,
                       const LeakageThresholds& th, int workers) {
    grid.validate();
    VerdictTable table;
    if (grid.g == 0.0) {
        table.warnings.emplace_back(
            "g = 0: every source-dependent observable vanishes; those rows are vacuous");
    }
    const FieldParams p = grid.field();
    std::optional<double> nw_rate;
    std::optional<double> w_rate;
    if (p.m > 0.0) {
        nw_rate = run_fit(FitTarget::NwSpacelike, p, spec).measured;
        w_rate = run_fit(FitTarget::WightmanSpacelike, p, spec).measured;
    } else {
        table.warnings.emplace_back("m = 0: spacelike decay is algebraic; no exponents fitted");
    }
    table.all_match = true;
    for (Observable o : leakage_observables()) {
        TableRow row;
        row.observable = o;
        row.expected = expected_verdict(o);
        row.report = leakage_scan(o, grid, spec, th, workers);
        row.matches = row.report.verdict == row.expected;
        if (o == Observable::IntensitySource) {
            row.vacuum_part = vacuum_intensity(p);
        } else if (o == Observable::EnergySource) {
            row.vacuum_part = vacuum_energy_density(p);
        }
        if (o == Observable::NwDensity) {
            row.decay_exponent = nw_rate;
        } else if (o == Observable::GlauberDensity || o == Observable::TruncatedIntensity ||
                   o == Observable::CommutatorGlauber) {
            row.decay_exponent = w_rate;
        }
        table.all_match = table.all_match && row.matches;
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace lightcone
