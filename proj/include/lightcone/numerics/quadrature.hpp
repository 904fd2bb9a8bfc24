#pragma once

#include <complex>
#include <vector>

namespace lightcone::numerics {

using complex = std::complex<double>;

// Which implementation of the panel kernel to run. Auto picks the widest
// instruction set the host supports.
enum class KernelBackend { Auto, Scalar, Avx2 };

// Controls for the semi-infinite oscillatory integrals.
//
// The default tolerances target the propagator scans. Tighter values are
// honoured down to the round-off floor of the panel sums; below that the
// integrator reports the floor in err_est instead of failing.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_panels = 2000;  // half-periods processed per oscillatory branch
    int accel_order = 8;    // highest epsilon-table column used
    // Softening scales for the mollified fallback path, strictly increasing.
    // Empty disables the fallback and the cross-check.
    std::vector<double> mollifier_widths;
    // Hard momentum cutoff; 0 means "none, accelerate to infinity".
    double hard_cutoff = 0.0;
    KernelBackend backend = KernelBackend::Auto;

    // Throws ConfigError when an invariant is violated.
    void validate() const;

    // Geometric ladder base, base*sqrt(2), base*2, ... with `count` entries.
    static std::vector<double> mollifier_ladder(double base, int count);

    bool operator==(const QuadratureSpec&) const = default;
};

struct ComplexSample {
    complex value{};
    double err_est = 0.0;
};

} // namespace lightcone::numerics
