#pragma once

#include <string>

#include "lightcone/causality_lab.hpp"

namespace lightcone::cli {

// Environment variable naming a config file; --config takes precedence.
inline constexpr const char* kConfigEnvVar = "LIGHTCONE_CONFIG";

struct RunConfig {
    double m = 1.0;
    double g = 0.1;
    double lambda = 20.0;
    double y0 = 0.0;
    double band_eps = kDefaultBandEps;
    double causal_threshold = 1e-4;
    double floor = 1e-12;
    int workers = 0;
    AxisRange T_range;
    AxisRange r_range;
    QuadratureSpec quadrature;
    std::string output_path;

    // Throws ConfigError.
    void validate() const;

    FieldParams field() const { return {m, g, lambda}; }
    SourceSpec source() const { return {y0, g}; }
    GridSpec grid() const { return {T_range, r_range, band_eps, m, g, lambda}; }
    LeakageThresholds thresholds() const { return {causal_threshold, floor}; }

    bool operator==(const RunConfig&) const = default;
};

// JSON text with every field; parse_config accepts any subset and rejects
// unknown keys. Both throw ConfigError on malformed input.
std::string dump_config(const RunConfig& cfg);
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

} // namespace lightcone::cli
