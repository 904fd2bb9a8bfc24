#include "lightcone/numerics/gauss_legendre.hpp"

#include <cmath>
#include <numbers>

#include "lightcone/errors.hpp"

namespace lightcone::numerics {

GaussRule make_gauss_legendre(int n) {
    if (n < 1) {
        throw DomainError("make_gauss_legendre: n must be positive");
    }
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        long double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        long double dp = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            long double p0 = 1.0L;
            long double p1 = x;
            for (int j = 2; j <= n; ++j) {
                const long double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0L);
            const long double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-19L) {
                break;
            }
        }
        const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
        rule.nodes[i] = static_cast<double>(-x);
        rule.nodes[n - 1 - i] = static_cast<double>(x);
        rule.weights[i] = static_cast<double>(w);
        rule.weights[n - 1 - i] = static_cast<double>(w);
    }
    return rule;
}

const GaussRule& gauss_legendre_16() {
    static const GaussRule rule = make_gauss_legendre(16);
    return rule;
}

} // namespace lightcone::numerics
