#include "lightcone/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "lightcone/errors.hpp"

namespace lightcone::cli {

using nlohmann::json;

namespace {

std::string fixed(const char* fmt, double v) {
    if (std::isnan(v)) {
        return "-";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

json number_or_null(double v) {
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return v;
}

void print_decay_fit(const DecayFit& f, std::ostream& out) {
    out << "model      " << to_string(f.model) << "\n"
        << "exponent   " << format_number(f.exponent) << "\n"
        << "stderr     " << format_number(f.std_error) << "\n"
        << "r2         " << format_number(f.r2) << "\n"
        << "window     [" << format_number(f.window_min) << ", " << format_number(f.window_max)
        << "]\n"
        << "samples    " << f.n << "\n";
}

} // namespace

int guarded(const std::function<int()>& fn, std::ostream& err) {
    try {
        return fn();
    } catch (const ConvergenceError& e) {
        err << "error (numerics): " << e.what() << "\n";
        return kExitNumerics;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_scan_csv(std::span<const PointRecord> rows, std::ostream& out) {
    out << "T,r,class,re,im,shell,err_est\n";
    for (const PointRecord& p : rows) {
        out << format_number(p.T) << ',' << format_number(p.r) << ',' << to_string(p.cls) << ',';
        if (p.evaluated) {
            out << format_number(p.value.real()) << ',' << format_number(p.value.imag());
        } else {
            out << ',';
        }
        out << ',';
        if (!std::isnan(p.shell)) {
            out << format_number(p.shell);
        }
        out << ',';
        if (p.evaluated) {
            out << format_number(p.err_est);
        }
        out << '\n';
    }
}

int cmd_point(Observable o, double T, double r, const RunConfig& cfg, bool as_json,
              std::ostream& out, std::ostream& /*err*/) {
    cfg.validate();
    const SpacetimeInterval iv(T, r);
    const PointRecord rec =
        evaluate_observable(o, iv, cfg.field(), cfg.source(), cfg.quadrature, cfg.band_eps);
    const bool pre_source = T < 0.0 && is_source_dependent(o);
    std::string note;
    if (pre_source) {
        note = "pre-source";
    } else if (!rec.evaluated) {
        note = rec.cls == LightconeClass::Lightlike ? "inside light-cone band; unevaluated"
                                                    : "stencil reaches light-cone band; unevaluated";
    }
    if (as_json) {
        json j = {{"observable", to_string(o)},
                  {"T", T},
                  {"r", r},
                  {"class", to_string(rec.cls)},
                  {"evaluated", rec.evaluated},
                  {"shell", number_or_null(rec.shell)}};
        if (rec.evaluated) {
            j["re"] = rec.value.real();
            j["im"] = rec.value.imag();
            j["err_est"] = rec.err_est;
        }
        if (!note.empty()) {
            j["note"] = note;
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "observable " << to_string(o) << "\n"
        << "T          " << format_number(T) << "\n"
        << "r          " << format_number(r) << "\n"
        << "class      " << to_string(rec.cls) << "\n";
    if (rec.evaluated) {
        out << "re         " << format_number(rec.value.real()) << "\n"
            << "im         " << format_number(rec.value.imag()) << "\n";
    }
    out << "shell      " << format_number(rec.shell) << "\n";
    if (rec.evaluated) {
        out << "err_est    " << format_number(rec.err_est) << "\n";
    }
    if (!note.empty()) {
        out << "note       " << note << "\n";
    }
    return kExitOk;
}

int cmd_scan(Observable o, const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    cfg.validate();
    const std::vector<PointRecord> rows = scan_grid(o, cfg.grid(), cfg.quadrature, cfg.workers);
    if (cfg.output_path.empty()) {
        write_scan_csv(rows, out);
        return kExitOk;
    }
    std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw ConfigError("cannot write '" + cfg.output_path + "'");
    }
    write_scan_csv(rows, file);
    file.close();
    if (!file) {
        throw ConfigError("failed writing '" + cfg.output_path + "'");
    }
    return kExitOk;
}

int cmd_check(const RunConfig& cfg, bool as_json, std::ostream& out, std::ostream& err) {
    cfg.validate();
    const VerdictTable table =
        verdict_table(cfg.grid(), cfg.quadrature, cfg.thresholds(), cfg.workers);
    for (const std::string& w : table.warnings) {
        err << "warning: " << w << "\n";
    }
    if (as_json) {
        json rows = json::array();
        for (const TableRow& row : table.rows) {
            const LeakageReport& rep = row.report;
            rows.push_back({{"observable", rep.observable_id},
                            {"expected", to_string(row.expected)},
                            {"verdict", to_string(rep.verdict)},
                            {"matches", row.matches},
                            {"vacuous", rep.vacuous},
                            {"spacelike_max", rep.spacelike_max},
                            {"timelike_max", rep.timelike_max},
                            {"leakage_ratio", rep.leakage_ratio},
                            {"n_points", rep.n_points},
                            {"n_band", rep.n_band},
                            {"floor", rep.floor},
                            {"vacuum_part", row.vacuum_part ? json(*row.vacuum_part) : json()},
                            {"decay_exponent",
                             row.decay_exponent ? json(*row.decay_exponent) : json()}});
        }
        out << json{{"rows", rows}, {"all_match", table.all_match}}.dump(2) << "\n";
    } else {
        char line[256];
        std::snprintf(line, sizeof line, "%-20s %-9s %-9s %-11s %-11s %-11s %-11s %-8s %s\n",
                      "observable", "expected", "verdict", "spacelike", "timelike", "ratio",
                      "vacuum", "decay", "match");
        out << line;
        for (const TableRow& row : table.rows) {
            const LeakageReport& rep = row.report;
            std::snprintf(line, sizeof line, "%-20s %-9s %-9s %-11s %-11s %-11s %-11s %-8s %s\n",
                          rep.observable_id.c_str(), to_string(row.expected),
                          to_string(rep.verdict), fixed("%.3e", rep.spacelike_max).c_str(),
                          fixed("%.3e", rep.timelike_max).c_str(),
                          fixed("%.3e", rep.leakage_ratio).c_str(),
                          row.vacuum_part ? fixed("%.5g", *row.vacuum_part).c_str() : "-",
                          row.decay_exponent ? fixed("%.4f", *row.decay_exponent).c_str() : "-",
                          row.matches ? (rep.vacuous ? "yes (vacuous)" : "yes") : "NO");
            out << line;
        }
        out << (table.all_match ? "all verdicts match\n" : "verdict mismatch\n");
    }
    if (!table.all_match) {
        for (const TableRow& row : table.rows) {
            if (!row.matches) {
                err << "mismatch: " << row.report.observable_id << " expected "
                    << to_string(row.expected) << ", got " << to_string(row.report.verdict)
                    << " (ratio " << format_number(row.report.leakage_ratio) << ")\n";
            }
        }
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_fit(FitTarget t, const RunConfig& cfg, bool as_json, std::ostream& out,
            std::ostream& /*err*/) {
    cfg.validate();
    const FitReport rep = run_fit(t, cfg.field(), cfg.quadrature);
    if (as_json) {
        json j = {{"target", to_string(t)},
                  {"expected", rep.expected},
                  {"measured", rep.measured},
                  {"tolerance", rep.tolerance},
                  {"relative_tolerance", rep.relative_tolerance},
                  {"pass", rep.pass}};
        if (rep.fit) {
            j["fit"] = {{"model", to_string(rep.fit->model)},
                        {"exponent", rep.fit->exponent},
                        {"stderr", rep.fit->std_error},
                        {"r2", rep.fit->r2},
                        {"window", {rep.fit->window_min, rep.fit->window_max}},
                        {"samples", rep.fit->n}};
        }
        if (!rep.phase.empty()) {
            json ph = json::array();
            for (const PhaseSample& s : rep.phase) {
                ph.push_back({{"T", s.T},
                              {"derivative", s.derivative},
                              {"expected", s.expected},
                              {"rel_dev", s.rel_dev}});
            }
            j["phase"] = ph;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "target     " << to_string(t) << "\n";
        if (rep.fit) {
            print_decay_fit(*rep.fit, out);
            out << "expected   " << format_number(rep.expected) << " +- "
                << fixed("%g", rep.tolerance) << (rep.relative_tolerance ? " (relative)" : "")
                << "\n";
        } else {
            out << "samples    " << rep.phase.size() << " phase derivatives, T in ["
                << format_number(rep.phase.front().T) << ", "
                << format_number(rep.phase.back().T) << "]\n"
                << "first dev  " << format_number(rep.phase.front().rel_dev) << "\n"
                << "last dev   " << format_number(rep.phase.back().rel_dev) << "\n"
                << "tail max   " << format_number(rep.measured) << " (limit "
                << fixed("%g", rep.tolerance) << ")\n";
        }
        out << "result     " << (rep.pass ? "pass" : "FAIL") << "\n";
    }
    return rep.pass ? kExitOk : kExitMismatch;
}

int cmd_vacuum(const RunConfig& cfg, bool as_json, std::ostream& out, std::ostream& /*err*/) {
    cfg.validate();
    const FieldParams p = cfg.field();
    const double intensity = vacuum_intensity(p);
    const double intensity_q = vacuum_intensity_quadrature(p, cfg.quadrature);
    const double energy = vacuum_energy_density(p);
    if (as_json) {
        out << json{{"m", p.m},
                    {"lambda", p.lambda},
                    {"vacuum_intensity", intensity},
                    {"vacuum_intensity_quadrature", intensity_q},
                    {"vacuum_energy_density", energy}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    out << "m                     " << format_number(p.m) << "\n"
        << "lambda                " << format_number(p.lambda) << "\n"
        << "vacuum_intensity      " << format_number(intensity) << "\n"
        << "  by quadrature       " << format_number(intensity_q) << "\n"
        << "vacuum_energy_density " << format_number(energy) << "\n";
    return kExitOk;
}

} // namespace lightcone::cli
