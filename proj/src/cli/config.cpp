#include "lightcone/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "lightcone/errors.hpp"

namespace lightcone::cli {

using nlohmann::json;

namespace {

const char* backend_name(KernelBackend b) {
    switch (b) {
    case KernelBackend::Auto:
        return "auto";
    case KernelBackend::Scalar:
        return "scalar";
    case KernelBackend::Avx2:
        return "avx2";
    }
    return "auto";
}

KernelBackend parse_backend(const std::string& s) {
    if (s == "auto") return KernelBackend::Auto;
    if (s == "scalar") return KernelBackend::Scalar;
    if (s == "avx2") return KernelBackend::Avx2;
    throw ConfigError("quadrature.backend must be auto, scalar or avx2");
}

json axis_to_json(const AxisRange& a) {
    return {{"min", a.min}, {"max", a.max}, {"count", a.count}};
}

void check_keys(const json& j, const char* where, std::initializer_list<const char*> keys) {
    if (!j.is_object()) {
        throw ConfigError(std::string(where) + " must be a JSON object");
    }
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : keys) {
            known = known || item.key() == k;
        }
        if (!known) {
            throw ConfigError("unknown config key '" + std::string(where) + "." + item.key() + "'");
        }
    }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
    if (j.contains(key)) {
        out = j.at(key).get<T>();
    }
}

AxisRange axis_from_json(const json& j, const char* where, AxisRange a) {
    check_keys(j, where, {"min", "max", "count"});
    read(j, "min", a.min);
    read(j, "max", a.max);
    read(j, "count", a.count);
    return a;
}

} // namespace

void RunConfig::validate() const {
    for (double v : {m, g, lambda, y0, band_eps, causal_threshold, floor}) {
        if (!std::isfinite(v)) {
            throw ConfigError("config: all numeric fields must be finite");
        }
    }
    if (!(causal_threshold > 0.0)) {
        throw ConfigError("config: causal_threshold must be > 0");
    }
    if (!(floor > 0.0)) {
        throw ConfigError("config: floor must be > 0");
    }
    if (workers < 0) {
        throw ConfigError("config: workers must be >= 0");
    }
    grid().validate();
    quadrature.validate();
}

std::string dump_config(const RunConfig& cfg) {
    const QuadratureSpec& q = cfg.quadrature;
    json j = {
        {"m", cfg.m},
        {"g", cfg.g},
        {"lambda", cfg.lambda},
        {"y0", cfg.y0},
        {"band_eps", cfg.band_eps},
        {"causal_threshold", cfg.causal_threshold},
        {"floor", cfg.floor},
        {"workers", cfg.workers},
        {"grid", {{"T", axis_to_json(cfg.T_range)}, {"r", axis_to_json(cfg.r_range)}}},
        {"quadrature",
         {{"abs_tol", q.abs_tol},
          {"rel_tol", q.rel_tol},
          {"max_panels", q.max_panels},
          {"accel_order", q.accel_order},
          {"mollifier_widths", q.mollifier_widths},
          {"backend", backend_name(q.backend)}}},
        {"output_path", cfg.output_path},
    };
    return j.dump(2) + "\n";
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    try {
        const json j = json::parse(text);
        check_keys(j, "config",
                   {"m", "g", "lambda", "y0", "band_eps", "causal_threshold", "floor", "workers",
                    "grid", "quadrature", "output_path"});
        read(j, "m", cfg.m);
        read(j, "g", cfg.g);
        read(j, "lambda", cfg.lambda);
        read(j, "y0", cfg.y0);
        read(j, "band_eps", cfg.band_eps);
        read(j, "causal_threshold", cfg.causal_threshold);
        read(j, "floor", cfg.floor);
        read(j, "workers", cfg.workers);
        read(j, "output_path", cfg.output_path);
        if (j.contains("grid")) {
            const json& gj = j.at("grid");
            check_keys(gj, "grid", {"T", "r"});
            if (gj.contains("T")) cfg.T_range = axis_from_json(gj.at("T"), "grid.T", cfg.T_range);
            if (gj.contains("r")) cfg.r_range = axis_from_json(gj.at("r"), "grid.r", cfg.r_range);
        }
        if (j.contains("quadrature")) {
            const json& qj = j.at("quadrature");
            check_keys(qj, "quadrature",
                       {"abs_tol", "rel_tol", "max_panels", "accel_order", "mollifier_widths",
                        "backend"});
            QuadratureSpec& q = cfg.quadrature;
            read(qj, "abs_tol", q.abs_tol);
            read(qj, "rel_tol", q.rel_tol);
            read(qj, "max_panels", q.max_panels);
            read(qj, "accel_order", q.accel_order);
            read(qj, "mollifier_widths", q.mollifier_widths);
            if (qj.contains("backend")) {
                q.backend = parse_backend(qj.at("backend").get<std::string>());
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace lightcone::cli
