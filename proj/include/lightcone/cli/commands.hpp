#pragma once

#include <functional>
#include <iosfwd>
#include <span>

#include "lightcone/cli/config.hpp"

namespace lightcone::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitUsage = 2,
    kExitNumerics = 3,
};

// Runs fn, reporting library errors on err and mapping them to exit codes:
// ConvergenceError -> 3, every other library error -> 2.
int guarded(const std::function<int()>& fn, std::ostream& err);

// %.17g; NaN and infinities render as "nan", "inf", "-inf".
std::string format_number(double v);

// CSV with header T,r,class,re,im,shell,err_est. Unevaluated rows leave
// re, im and err_est empty; a NaN shell is left empty too.
void write_scan_csv(std::span<const PointRecord> rows, std::ostream& out);

int cmd_point(Observable o, double T, double r, const RunConfig& cfg, bool as_json,
              std::ostream& out, std::ostream& err);
// Writes to cfg.output_path, or to out when it is empty.
int cmd_scan(Observable o, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& cfg, bool as_json, std::ostream& out, std::ostream& err);
int cmd_fit(FitTarget t, const RunConfig& cfg, bool as_json, std::ostream& out,
            std::ostream& err);
int cmd_vacuum(const RunConfig& cfg, bool as_json, std::ostream& out, std::ostream& err);

} // namespace lightcone::cli
