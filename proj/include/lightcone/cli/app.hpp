#pragma once

#include <iosfwd>

namespace lightcone::cli {

// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lightcone::cli
