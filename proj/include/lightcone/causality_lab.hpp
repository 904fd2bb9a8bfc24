#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lightcone/localization.hpp"
#include "lightcone/observables.hpp"

namespace lightcone {

struct AxisRange {
    double min = 0.1;
    double max = 5.0;
    int count = 40;

    // Node i of count equally spaced nodes including both ends.
    double at(int i) const;
    bool operator==(const AxisRange&) const = default;
};

struct GridSpec {
    AxisRange T_range;
    AxisRange r_range;
    double band_eps = kDefaultBandEps;
    double m = 1.0;
    double g = 0.1;
    double lambda = 20.0;

    void validate() const;
    FieldParams field() const { return {m, g, lambda}; }
    SourceSpec source() const { return {0.0, g}; }
    bool operator==(const GridSpec&) const = default;
};

enum class Observable {
    Field,
    IntensitySource,
    EnergySource,
    NwDensity,
    GlauberDensity,
    TruncatedIntensity,
    CommutatorField,
    CommutatorNw,
    CommutatorGlauber,
    Wightman,
    DeltaPlus,
    Delta,
    DeltaRet,
    OneParticleWavefunction,
    NwWavefunction,
};

// Throws ConfigError for unknown names.
Observable parse_observable(std::string_view id);
const char* to_string(Observable o);
std::span<const Observable> all_observables();
// The nine observables with a causal/non-causal verdict.
std::span<const Observable> leakage_observables();
bool has_verdict(Observable o);
// Observables that vanish identically before the source switches on.
bool is_source_dependent(Observable o);

struct PointRecord {
    double T = 0.0;
    double r = 0.0;
    LightconeClass cls = LightconeClass::Lightlike;
    bool evaluated = false;
    complex value{};
    double shell = 0.0;
    double err_est = 0.0;
};

// Point value of an observable. Band points (and points whose difference
// stencil reaches into the band) come back with evaluated = false; the shell
// field then carries the cone coefficient where the observable has one.
// Source-dependent observables are exactly zero for T < 0, band or not.
// Commutator observables report the largest coefficient magnitude.
PointRecord evaluate_observable(Observable o, const SpacetimeInterval& iv, const FieldParams& p,
                                const SourceSpec& src, const QuadratureSpec& spec,
                                double eps = kDefaultBandEps);

// All grid points in T-major order. workers = 0 uses the hardware concurrency;
// the result does not depend on the worker count.
std::vector<PointRecord> scan_grid(Observable o, const GridSpec& grid, const QuadratureSpec& spec,
                                   int workers = 0);

struct LeakageThresholds {
    double causal_threshold = 1e-4;
    double floor = 1e-12;
};

enum class Verdict { Causal, NonCausal };
const char* to_string(Verdict v);

struct LeakageReport {
    std::string observable_id;
    double spacelike_max = 0.0;
    double timelike_max = 0.0;
    double leakage_ratio = 0.0;  // spacelike_max / max(timelike_max, floor)
    Verdict verdict = Verdict::Causal;
    int n_points = 0;
    int n_spacelike = 0;
    int n_timelike = 0;
    int n_band = 0;
    double floor = 0.0;
    // Both maxima at or below the floor: nothing to measure, reported as causal.
    bool vacuous = false;
};

LeakageReport summarize_leakage(Observable o, std::span<const PointRecord> points,
                                const LeakageThresholds& th = {});

// Throws ConfigError for observables without a verdict.
LeakageReport leakage_scan(Observable o, const GridSpec& grid, const QuadratureSpec& spec,
                           const LeakageThresholds& th = {}, int workers = 0);

enum class DecayModel { ExpSqrt, PowerLaw };
const char* to_string(DecayModel m);

struct DecayFit {
    DecayModel model = DecayModel::ExpSqrt;
    double exponent = 0.0;  // value ~ exp(-exponent x) or x^-exponent
    double std_error = 0.0;
    double r2 = 0.0;
    double window_min = 0.0;
    double window_max = 0.0;
    int n = 0;
};

// Least squares of log(value) against x (ExpSqrt) or log(x) (PowerLaw).
// Needs >= 5 samples with value > 0 (and x > 0 for PowerLaw); DomainError otherwise.
DecayFit decay_fit(std::span<const std::pair<double, double>> samples, DecayModel model);

enum class FitTarget { NwSpacelike, NwTimelikePhase, VacuumPowerlaw, WightmanSpacelike };

FitTarget parse_fit_target(std::string_view id);
const char* to_string(FitTarget t);

struct PhaseSample {
    double T = 0.0;
    double derivative = 0.0;
    double expected = 0.0;
    double rel_dev = 0.0;
};

struct FitReport {
    FitTarget target = FitTarget::NwSpacelike;
    std::optional<DecayFit> fit;       // absent for the phase law
    std::vector<PhaseSample> phase;    // phase law only
    double expected = 0.0;
    double measured = 0.0;             // exponent, or the worst tail deviation for the phase law
    double tolerance = 0.0;
    bool relative_tolerance = true;
    bool pass = false;
};

// nw_spacelike:       log|psi_NW| minus log(m sqrt(T)/(r^2-T^2)) against sqrt(r^2-T^2),
//                     T = 1, r in [3, 7]; expects m to 5 %.
// nw_timelike_phase:  d(arg psi_NW)/dT along r = 1, T in [3, 8]; the deviation from
//                     -m T / sqrt(T^2 - 1) must stay within 5 % over T >= 5.5 and shrink.
// vacuum_powerlaw:    massless equal-time W against rho in [0.5, 5]; expects 2 +- 0.02.
// wightman_spacelike: s^(3/2) W on T = 0.5, s in [4, 12]; expects m to 2 %.
FitReport run_fit(FitTarget target, const FieldParams& p, const QuadratureSpec& spec);

struct TableRow {
    Observable observable = Observable::Field;
    Verdict expected = Verdict::Causal;
    LeakageReport report;
    std::optional<double> vacuum_part;     // source-independent constant, where present
    std::optional<double> decay_exponent;  // spacelike decay rate of the underlying amplitude
    bool matches = false;
};

struct VerdictTable {
    std::vector<TableRow> rows;
    bool all_match = false;
    std::vector<std::string> warnings;
};

Verdict expected_verdict(Observable o);

VerdictTable verdict_table(const GridSpec& grid, const QuadratureSpec& spec,
                       const LeakageThresholds& th = {}, int workers = 0);

} // namespace lightcone
