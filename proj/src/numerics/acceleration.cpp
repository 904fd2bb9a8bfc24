#include "lightcone/numerics/acceleration.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "lightcone/errors.hpp"

namespace lightcone::numerics {

namespace {

using wide = std::complex<long double>;

bool negligible(const wide& diff, const wide& a, const wide& b) {
    const long double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(diff) <= 1e-30L * scale || std::abs(diff) == 0.0L;
}

} // namespace

ComplexSample accelerate(std::span<const complex> partial_sums, int order) {
    if (order < 1) {
        throw DomainError("accelerate: order must be positive");
    }
    const std::size_t n = partial_sums.size();
    if (n < static_cast<std::size_t>(order) + 2) {
        throw DomainError("accelerate: need at least order + 2 partial sums, got " +
                          std::to_string(n));
    }

    const complex last = partial_sums[n - 1];
    if (last == partial_sums[n - 2]) {
        return {last, 0.0};
    }

    // prev2 holds column k-2, prev1 column k-1; column -1 is identically zero.
    std::vector<wide> prev2(n + 1, wide{0.0L, 0.0L});
    std::vector<wide> prev1(partial_sums.begin(), partial_sums.end());
    std::vector<wide> cur;

    wide best = prev1.back();
    long double best_err = std::abs(prev1[n - 1] - prev1[n - 2]);

    const int max_col = std::min<int>(order, static_cast<int>(n) - 1);
    for (int k = 1; k <= max_col; ++k) {
        const std::size_t len = prev1.size() - 1;
        cur.assign(len, wide{});
        for (std::size_t i = 0; i < len; ++i) {
            const wide diff = prev1[i + 1] - prev1[i];
            if (negligible(diff, prev1[i + 1], prev1[i])) {
                // Column k-1 has converged at this entry. For an even column
                // that is the limit itself.
                if ((k - 1) % 2 == 0) {
                    return {complex(static_cast<double>(prev1[i + 1].real()),
                                    static_cast<double>(prev1[i + 1].imag())),
                            0.0};
                }
                return {complex(static_cast<double>(best.real()),
                                static_cast<double>(best.imag())),
                        static_cast<double>(best_err)};
            }
            cur[i] = prev2[i + 1] + 1.0L / diff;
        }
        if (k % 2 == 0) {
            const wide estimate = cur.back();
            const long double err = cur.size() >= 2 ? std::abs(cur.back() - cur[cur.size() - 2])
                                                    : std::abs(estimate - best);
            best = estimate;
            best_err = err;
        }
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
        cur = {};
    }

    const complex value(static_cast<double>(best.real()), static_cast<double>(best.imag()));
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw ConvergenceError("accelerate: epsilon table produced a non-finite estimate");
    }
    return {value, static_cast<double>(best_err)};
}

} // namespace lightcone::numerics
