#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lightcone/errors.hpp"
#include "lightcone/numerics/radial_integral.hpp"
#include "lightcone/numerics/special_functions.hpp"
#include "lightcone/propagators.hpp"

using namespace lightcone;

namespace {

constexpr double kPi = std::numbers::pi;

QuadratureSpec tight() {
    QuadratureSpec s;
    s.abs_tol = 1e-14;
    s.rel_tol = 1e-11;
    return s;
}

// Smooth part of the Pauli-Jordan function inside the cone, m J1(m s) / (4 pi s).
double pauli_jordan_interior(double T, double r, double m) {
    const double s = std::sqrt(T * T - r * r);
    const double v = m * numerics::bessel_j1(m * s) / (4.0 * kPi * s);
    return T > 0 ? v : -v;
}

} // namespace

TEST_CASE("classification") {
    CHECK(classify({2.0, 1.0}, 0.05) == LightconeClass::Timelike);
    CHECK(classify({1.0, 2.0}, 0.05) == LightconeClass::Spacelike);
    CHECK(classify({1.0, 1.01}, 0.05) == LightconeClass::Lightlike);
    CHECK(classify({-1.0, 1.01}, 0.05) == LightconeClass::Lightlike);
    CHECK(classify({-2.0, 1.0}, 0.05) == LightconeClass::Timelike);
    CHECK(classify({1.0, 1.0}, 0.0) == LightconeClass::Lightlike);
    CHECK(classify({0.0, 0.0}, 0.0) == LightconeClass::Lightlike);
    const SpacetimeInterval iv(3.0, 2.0);
    CHECK(iv.s2() == 5.0);
    CHECK_THROWS_AS(SpacetimeInterval(1.0, -0.1), DomainError);
    CHECK_THROWS_AS(SpacetimeInterval(std::nan(""), 1.0), DomainError);
}

TEST_CASE("field parameters validate") {
    CHECK_NOTHROW(FieldParams{}.validate());
    CHECK_THROWS_AS((FieldParams{-1.0, 0.1, 20.0}.validate()), ConfigError);
    CHECK_THROWS_AS((FieldParams{1.0, 0.1, 0.0}.validate()), ConfigError);
}

TEST_CASE("wightman reference values") {
    const QuadratureSpec spec = tight();
    SUBCASE("massless, T = 0, r = 1") {
        const FieldParams p{0.0, 0.1, 20.0};
        const double expect = 1.0 / (4.0 * kPi * kPi);
        CHECK(expect == doctest::Approx(0.0253303).epsilon(1e-5));
        for (auto path : {WightmanPath::Quadrature, WightmanPath::ClosedForm}) {
            CHECK(wightman({0.0, 1.0}, p, spec, path).value.real() ==
                  doctest::Approx(expect).epsilon(1e-9));
        }
    }
    SUBCASE("m = 1, T = 0, r = 2") {
        const FieldParams p;
        const double closed = wightman({0.0, 2.0}, p, spec, WightmanPath::ClosedForm).value.real();
        const ComplexSample quad = wightman({0.0, 2.0}, p, spec, WightmanPath::Quadrature);
        CHECK(closed == doctest::Approx(std::cyl_bessel_k(1.0, 2.0) / (8.0 * kPi * kPi)));
        CHECK(closed == doctest::Approx(1.7714e-3).epsilon(1e-4));
        CHECK(quad.value.real() == doctest::Approx(closed).epsilon(1e-8));
        CHECK(std::abs(quad.value.imag()) < 1e-12);
    }
    SUBCASE("closed form rejects non-spacelike input") {
        CHECK_THROWS_AS(wightman_spacelike_closed_form({2.0, 1.0}, 1.0), DomainError);
        CHECK_THROWS_AS(wightman({2.0, 1.0}, FieldParams{}, spec, WightmanPath::ClosedForm),
                        DomainError);
    }
    SUBCASE("band is rejected") {
        CHECK_THROWS_AS(wightman({1.0, 1.02}, FieldParams{}, spec), LightconeBandError);
    }
}

TEST_CASE("wightman hermiticity W(-T) = conj W(T)") {
    const QuadratureSpec spec;
    const FieldParams p;
    for (auto [T, r] : {std::pair{1.5, 0.7}, std::pair{0.5, 2.0}, std::pair{3.0, 0.0}}) {
        const ComplexSample a = wightman({T, r}, p, spec, WightmanPath::Quadrature);
        const ComplexSample b = wightman({-T, r}, p, spec, WightmanPath::Quadrature);
        CHECK(std::abs(a.value - std::conj(b.value)) <= a.err_est + b.err_est + 1e-15);
    }
}

TEST_CASE("spacelike quadrature matches the closed form") {
    const QuadratureSpec spec = tight();
    for (double m : {0.5, 1.0, 2.0}) {
        const FieldParams p{m, 0.1, 20.0};
        for (double s : {0.1, 0.5, 1.0, 3.0, 6.0, 10.0}) {
            for (double T : {0.0, 0.5}) {
                const SpacetimeInterval iv(T, std::sqrt(s * s + T * T));
                const double closed = wightman_spacelike_closed_form(iv, m);
                const ComplexSample q = wightman(iv, p, spec, WightmanPath::Quadrature, 0.0);
                CHECK(q.value.real() == doctest::Approx(closed).epsilon(1e-5));
            }
        }
    }
}

TEST_CASE("delta_plus and delta_minus") {
    const QuadratureSpec spec;
    const FieldParams p;
    for (auto [T, r] : {std::pair{2.0, 0.5}, std::pair{0.0, 2.0}, std::pair{-1.0, 3.0}}) {
        const ComplexSample dp = delta_plus({T, r}, p, spec);
        const ComplexSample dm = delta_minus({T, r}, p, spec);
        CHECK(dm.value == std::conj(dp.value));
        const ComplexSample w = wightman({T, r}, p, spec);
        CHECK(dp.value == complex(0.0, -1.0) * w.value);
    }
    const ComplexSample at2 = delta_plus({0.0, 2.0}, p, spec);
    CHECK(at2.value.real() == 0.0);
    CHECK(std::abs(at2.value) == doctest::Approx(1.7714e-3).epsilon(1e-4));
    const ComplexSample s4 = delta_plus({0.0, 4.0}, p, spec);
    CHECK(std::abs(s4.value) ==
          doctest::Approx(std::cyl_bessel_k(1.0, 4.0) / (16.0 * kPi * kPi)).epsilon(1e-10));
}

TEST_CASE("Pauli-Jordan function") {
    const QuadratureSpec spec = tight();
    const FieldParams p;
    SUBCASE("vanishes at spacelike points") {
        const PropagatorValue d = delta({1.0, 3.0}, p, spec);
        CHECK(d.evaluated);
        CHECK(std::abs(d.smooth) <= 1e-6);
        CHECK(d.shell == 0.0);
    }
    SUBCASE("equals 2 Im W from an independent quadrature") {
        const PropagatorValue d = delta({3.0, 1.0}, p, spec);
        const numerics::WeightFunction w = [](double k) { return 0.5 / std::sqrt(k * k + 1.0); };
        const ComplexSample indep = numerics::radial_momentum_integral(w, 1.0, 3.0, 1.0, spec);
        CHECK(d.smooth.real() == doctest::Approx(2.0 * indep.value.imag()).epsilon(1e-9));
        CHECK(d.smooth.imag() == 0.0);
        CHECK(d.smooth.real() == doctest::Approx(pauli_jordan_interior(3.0, 1.0, 1.0)).epsilon(1e-8));
    }
    SUBCASE("interior values against the J1 oracle, both time directions") {
        for (auto [T, r] : {std::pair{2.0, 0.5}, std::pair{4.0, 2.0}, std::pair{-3.0, 1.0},
                            std::pair{1.0, 0.0}}) {
            const PropagatorValue d = delta({T, r}, p, spec);
            CHECK(d.smooth.real() ==
                  doctest::Approx(pauli_jordan_interior(T, r, 1.0)).epsilon(1e-8));
        }
    }
    SUBCASE("massless interior is empty") {
        const PropagatorValue d = delta({2.0, 0.5}, FieldParams{0.0, 0.1, 20.0}, spec);
        CHECK(std::abs(d.smooth) <= 1e-10);
    }
    SUBCASE("band points carry the shell") {
        const PropagatorValue fwd = delta({1.0, 1.02}, p, spec);
        CHECK_FALSE(fwd.evaluated);
        CHECK(fwd.shell == doctest::Approx(kShellCoefficient / 1.02));
        const PropagatorValue bwd = delta({-1.0, 1.02}, p, spec);
        CHECK(bwd.shell == doctest::Approx(-kShellCoefficient / 1.02));
        CHECK(delta_ret({-1.0, 1.02}, p, spec).shell == 0.0);
        CHECK(delta_ret({1.0, 1.02}, p, spec).shell == fwd.shell);
    }
}

TEST_CASE("support of Delta and Delta_ret on a spacelike grid") {
    const QuadratureSpec spec;
    for (double m : {0.5, 1.0, 2.0}) {
        const FieldParams p{m, 0.1, 20.0};
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                const SpacetimeInterval iv(0.1 + 0.5 * i, 0.1 + 0.5 * j);
                if (classify(iv, 0.05) != LightconeClass::Spacelike) continue;
                CHECK(std::abs(delta(iv, p, spec).smooth) <= 1e-6);
                CHECK(std::abs(delta_ret(iv, p, spec).smooth) <= 1e-6);
            }
        }
    }
}

TEST_CASE("retarded propagator") {
    const QuadratureSpec spec;
    const FieldParams p;
    const PropagatorValue past = delta_ret({-1.0, 0.3}, p, spec);
    CHECK(past.smooth == complex{});
    CHECK(past.shell == 0.0);
    CHECK(std::abs(delta_ret({1.0, 2.0}, p, spec).smooth) <= 1e-6);
    const ComplexSample w = wightman({2.0, 0.5}, p, spec, WightmanPath::Quadrature);
    CHECK(delta_ret({2.0, 0.5}, p, spec).smooth.real() == doctest::Approx(2.0 * w.value.imag()));
}

TEST_CASE("shell coefficient calibration reproduces the frozen constant") {
    const QuadratureSpec spec;
    for (double r : {0.5, 1.0, 2.0}) {
        const double c = calibrate_shell_coefficient(r, 40.0, spec);
        CHECK(c == doctest::Approx(kShellCoefficient).epsilon(1e-6));
    }
    CHECK(shell_coefficient(2.0) == doctest::Approx(kShellCoefficient / 2.0));
    CHECK_THROWS_AS(shell_coefficient(0.0), DomainError);
}

TEST_CASE("derivatives") {
    const QuadratureSpec spec;
    const FieldParams p;
    SUBCASE("d_T W at T = 0 is purely imaginary") {
        const ComplexSample d = d_dt(PropagatorFn::Wightman, {0.0, 1.5}, p, spec);
        CHECK(std::abs(d.value.real()) <= 1e-9);
    }
    SUBCASE("d_r of the spacelike closed form") {
        const double x = 2.0;
        const double k0 = std::cyl_bessel_k(0.0, x);
        const double k1 = std::cyl_bessel_k(1.0, x);
        // d/dr [K1(r) / r] with K1' = -K0 - K1 / r.
        const double exact = ((-k0 - k1 / x) / x - k1 / (x * x)) / (4.0 * kPi * kPi);
        const ComplexSample d = d_dr(PropagatorFn::Wightman, {0.0, x}, p, spec);
        CHECK(d.value.real() == doctest::Approx(exact).epsilon(1e-4));
    }
    SUBCASE("d_T of the interior Pauli-Jordan function") {
        const double T = 2.0, r = 0.5, h = 1e-3;
        const double fd = (pauli_jordan_interior(T + h, r, 1.0) - pauli_jordan_interior(T - h, r, 1.0)) / (2 * h);
        const ComplexSample d = d_dt(PropagatorFn::Delta, {T, r}, p, spec);
        CHECK(d.value.real() == doctest::Approx(fd).epsilon(1e-5));
    }
    SUBCASE("derivative of Delta vanishes at spacelike points") {
        CHECK(std::abs(d_dt(PropagatorFn::Delta, {1.0, 3.0}, p, spec).value) <= 1e-5);
        CHECK(std::abs(d_dr(PropagatorFn::Delta, {1.0, 3.0}, p, spec).value) <= 1e-5);
    }
    SUBCASE("stencil must stay clear of the band") {
        CHECK_THROWS_AS(d_dt(PropagatorFn::Delta, {1.0, 1.0501}, p, spec), LightconeBandError);
    }
    SUBCASE("retarded derivative before the source is zero") {
        CHECK(d_dt(PropagatorFn::DeltaRet, {-2.0, 0.5}, p, spec).value == complex{});
    }
}

TEST_CASE("Klein-Gordon residual of the Wightman function") {
    const QuadratureSpec spec = tight();
    for (double m : {0.5, 1.0}) {
        const FieldParams p{m, 0.1, 20.0};
        for (auto [T, r] : {std::pair{2.0, 0.7}, std::pair{3.0, 1.5}, std::pair{0.5, 2.0},
                            std::pair{1.0, 3.5}}) {
            const double h = 1e-2;
            auto W = [&](double t, double x) {
                return wightman({t, x}, p, spec, WightmanPath::Quadrature).value;
            };
            const complex c = W(T, r);
            const complex tt = (W(T + h, r) - 2.0 * c + W(T - h, r)) / (h * h);
            const complex rr = (W(T, r + h) - 2.0 * c + W(T, r - h)) / (h * h);
            const complex dr = (W(T, r + h) - W(T, r - h)) / (2.0 * h);
            const complex residual = tt - rr - 2.0 / r * dr + m * m * c;
            const double scale = std::abs(tt) + std::abs(rr) + std::abs(2.0 / r * dr) +
                                 m * m * std::abs(c);
            CHECK(std::abs(residual) <= 1e-3 * scale);
        }
    }
}
