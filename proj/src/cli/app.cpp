#include "lightcone/cli/app.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "lightcone/cli/commands.hpp"
#include "lightcone/errors.hpp"

namespace lightcone::cli {

namespace {

struct Overrides {
    std::string config_path;
    std::optional<double> m, g, lambda, y0, band_eps, threshold, floor;
    std::optional<int> workers;
    std::optional<std::string> output;
    std::optional<double> T_min, T_max, r_min, r_max;
    std::optional<int> T_count, r_count;
    std::optional<std::string> backend;
    bool dump = false;
    bool json = false;
};

template <typename T>
void apply(const std::optional<T>& o, T& target) {
    if (o) {
        target = *o;
    }
}

RunConfig resolve_config(const Overrides& ov) {
    std::string path = ov.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') {
            path = env;
        }
    }
    RunConfig cfg = path.empty() ? RunConfig{} : load_config(path);
    apply(ov.m, cfg.m);
    apply(ov.g, cfg.g);
    apply(ov.lambda, cfg.lambda);
    apply(ov.y0, cfg.y0);
    apply(ov.band_eps, cfg.band_eps);
    apply(ov.threshold, cfg.causal_threshold);
    apply(ov.floor, cfg.floor);
    apply(ov.workers, cfg.workers);
    apply(ov.output, cfg.output_path);
    apply(ov.T_min, cfg.T_range.min);
    apply(ov.T_max, cfg.T_range.max);
    apply(ov.T_count, cfg.T_range.count);
    apply(ov.r_min, cfg.r_range.min);
    apply(ov.r_max, cfg.r_range.max);
    apply(ov.r_count, cfg.r_range.count);
    if (ov.backend) {
        cfg.quadrature.backend = *ov.backend == "scalar" ? KernelBackend::Scalar
                                 : *ov.backend == "avx2" ? KernelBackend::Avx2
                                                         : KernelBackend::Auto;
    }
    cfg.validate();
    return cfg;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Light-cone causality laboratory for a free scalar field"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    Overrides ov;
    app.add_option("--config", ov.config_path,
                   std::string("JSON config file (default: $") + kConfigEnvVar + ")");
    app.add_option("--m", ov.m, "field mass");
    app.add_option("--g", ov.g, "source coupling");
    app.add_option("--lambda", ov.lambda, "momentum cutoff for vacuum constants");
    app.add_option("--y0", ov.y0, "source switch-on time");
    app.add_option("--band-eps", ov.band_eps, "half-width of the excluded light-cone band");
    app.add_option("--threshold", ov.threshold, "causal threshold on the leakage ratio");
    app.add_option("--floor", ov.floor, "numerical floor");
    app.add_option("--workers", ov.workers, "scan threads (0 = all cores)");
    app.add_option("-o,--output", ov.output, "CSV output path for scan");
    app.add_option("--T-min", ov.T_min, "smallest grid T");
    app.add_option("--T-max", ov.T_max, "largest grid T");
    app.add_option("--T-count", ov.T_count, "number of T nodes");
    app.add_option("--r-min", ov.r_min, "smallest grid r");
    app.add_option("--r-max", ov.r_max, "largest grid r");
    app.add_option("--r-count", ov.r_count, "number of r nodes");
    app.add_option("--backend", ov.backend, "panel kernel: auto, scalar or avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
    app.add_flag("--dump-config", ov.dump, "print the effective config as JSON and exit");
    app.add_flag("--json", ov.json, "JSON output for point, check, fit and vacuum");

    std::string observable;
    double T = 0.0;
    double r = 0.0;
    auto* point = app.add_subcommand("point", "evaluate one observable at (T, r)");
    point->add_option("observable", observable)->required();
    point->add_option("T", T, "time relative to the source")->required();
    point->add_option("r", r, "distance from the source")->required();

    auto* scan = app.add_subcommand("scan", "evaluate an observable over the grid, CSV output");
    scan->add_option("observable", observable)->required();

    auto* check = app.add_subcommand("check", "causality verdict table");

    std::string target;
    auto* fit = app.add_subcommand("fit", "decay and phase-law fits");
    fit->add_option("target", target)
        ->required()
        ->check(CLI::IsMember(
            {"nw_spacelike", "nw_timelike_phase", "vacuum_powerlaw", "wightman_spacelike"}));

    auto* vacuum = app.add_subcommand("vacuum", "vacuum constants for m and lambda");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    return guarded(
        [&]() -> int {
            const RunConfig cfg = resolve_config(ov);
            if (ov.dump) {
                out << dump_config(cfg);
                return kExitOk;
            }
            if (*point) {
                return cmd_point(parse_observable(observable), T, r, cfg, ov.json, out, err);
            }
            if (*scan) {
                return cmd_scan(parse_observable(observable), cfg, out, err);
            }
            if (*check) {
                return cmd_check(cfg, ov.json, out, err);
            }
            if (*fit) {
                return cmd_fit(parse_fit_target(target), cfg, ov.json, out, err);
            }
            if (*vacuum) {
                return cmd_vacuum(cfg, ov.json, out, err);
            }
            err << app.help();
            return kExitUsage;
        },
        err);
}

} // namespace lightcone::cli
