#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "lightcone/causality_lab.hpp"
#include "lightcone/errors.hpp"

using namespace lightcone;

namespace {

GridSpec small_grid(int n) {
    GridSpec g;
    g.T_range.count = n;
    g.r_range.count = n;
    return g;
}

bool same(const PointRecord& a, const PointRecord& b) {
    auto eq = [](double x, double y) { return x == y || (std::isnan(x) && std::isnan(y)); };
    return a.T == b.T && a.r == b.r && a.cls == b.cls && a.evaluated == b.evaluated &&
           a.value == b.value && eq(a.shell, b.shell) && a.err_est == b.err_est;
}

} // namespace

TEST_CASE("grid geometry and validation") {
    const AxisRange a{0.1, 5.0, 40};
    CHECK(a.at(0) == 0.1);
    CHECK(a.at(39) == 5.0);
    CHECK(a.at(13) == doctest::Approx(0.1 + 4.9 * 13 / 39.0));
    GridSpec g;
    CHECK_NOTHROW(g.validate());
    g.T_range.count = 1;
    CHECK_THROWS_AS(g.validate(), ConfigError);
    g = GridSpec{};
    g.r_range = {2.0, 1.0, 5};
    CHECK_THROWS_AS(g.validate(), ConfigError);
    g = GridSpec{};
    g.band_eps = -1.0;
    CHECK_THROWS_AS(g.validate(), ConfigError);
}

TEST_CASE("observable names") {
    for (Observable o : all_observables()) {
        CHECK(parse_observable(to_string(o)) == o);
    }
    CHECK(leakage_observables().size() == 9);
    CHECK(has_verdict(Observable::CommutatorNw));
    CHECK_FALSE(has_verdict(Observable::Wightman));
    CHECK_THROWS_AS(parse_observable("energy"), ConfigError);
    CHECK_THROWS_AS(leakage_scan(Observable::Delta, small_grid(3), QuadratureSpec{}), ConfigError);
    CHECK_THROWS_AS(parse_fit_target("nw"), ConfigError);
}

TEST_CASE("evaluate_observable") {
    const QuadratureSpec spec;
    const FieldParams p;
    const SourceSpec src;
    SUBCASE("band point keeps the shell and stays unevaluated") {
        const PointRecord rec = evaluate_observable(Observable::Field, {1.0, 1.02}, p, src, spec);
        CHECK(rec.cls == LightconeClass::Lightlike);
        CHECK_FALSE(rec.evaluated);
        CHECK(rec.shell == doctest::Approx(src.g * kShellCoefficient / 1.02));
        CHECK(evaluate_observable(Observable::NwDensity, {1.0, 1.02}, p, src, spec).shell == 0.0);
    }
    SUBCASE("pre-source points are exact zeros") {
        const PointRecord rec = evaluate_observable(Observable::Field, {-1.0, 1.0}, p, src, spec);
        CHECK(rec.evaluated);
        CHECK(rec.value == complex{});
        CHECK(rec.cls == LightconeClass::Lightlike);
        CHECK(evaluate_observable(Observable::GlauberDensity, {-2.0, 1.0}, p, src, spec).value ==
              complex{});
    }
    SUBCASE("commutator observables report the largest coefficient") {
        for (auto [o, k] : {std::pair{Observable::CommutatorField, CommutatorKind::Field},
                            std::pair{Observable::CommutatorNw, CommutatorKind::NW},
                            std::pair{Observable::CommutatorGlauber, CommutatorKind::Glauber}}) {
            const auto c = microcausality_coefficients(k, {1.0, 2.0}, p, spec);
            const PointRecord rec = evaluate_observable(o, {1.0, 2.0}, p, src, spec);
            CHECK(rec.value.real() == *std::max_element(c.begin(), c.end()));
        }
    }
    SUBCASE("energy stencil reaching the band is unevaluated, not an error") {
        const PointRecord rec =
            evaluate_observable(Observable::EnergySource, {1.0, 1.0501}, p, src, spec);
        CHECK(rec.cls == LightconeClass::Spacelike);
        CHECK_FALSE(rec.evaluated);
    }
}

TEST_CASE("scan order and determinism") {
    const QuadratureSpec spec;
    GridSpec g = small_grid(7);
    const auto one = scan_grid(Observable::NwDensity, g, spec, 1);
    REQUIRE(one.size() == 49);
    CHECK(one[1].T == one[0].T);
    CHECK(one[7].T > one[0].T);
    CHECK(one[8].r == one[1].r);
    for (int workers : {2, 5, 0}) {
        const auto other = scan_grid(Observable::NwDensity, g, spec, workers);
        REQUIRE(other.size() == one.size());
        for (std::size_t i = 0; i < one.size(); ++i) {
            CHECK(same(one[i], other[i]));
        }
    }
    g.T_range.count = 2;
    g.r_range.count = 2;
    CHECK(scan_grid(Observable::Field, g, spec).size() == 4);
}

TEST_CASE("scan propagates the first failure") {
    GridSpec g = small_grid(4);
    g.T_range = {-1.0, 1.0, 3};  // T = 0 row is degenerate for the NW amplitude
    CHECK_THROWS_AS(scan_grid(Observable::NwWavefunction, g, QuadratureSpec{}, 3), DomainError);
}

TEST_CASE("leakage summary arithmetic") {
    std::vector<PointRecord> pts(4);
    pts[0] = {1.0, 2.0, LightconeClass::Spacelike, true, complex(2e-8, 0.0), 0.0, 0.0};
    pts[1] = {2.0, 1.0, LightconeClass::Timelike, true, complex(0.0, -1e-3), 0.0, 0.0};
    pts[2] = {1.0, 1.0, LightconeClass::Lightlike, false, {}, -0.08, 0.0};
    pts[3] = {3.0, 1.0, LightconeClass::Timelike, true, complex(5e-4, 0.0), 0.0, 0.0};
    LeakageReport r = summarize_leakage(Observable::Field, pts);
    CHECK(r.spacelike_max == 2e-8);
    CHECK(r.timelike_max == 1e-3);
    CHECK(r.leakage_ratio == doctest::Approx(2e-5));
    CHECK(r.verdict == Verdict::Causal);
    CHECK(r.n_band == 1);
    CHECK(r.n_spacelike == 1);
    CHECK(r.n_timelike == 2);
    r = summarize_leakage(Observable::Field, pts, {1e-6, 1e-12});
    CHECK(r.verdict == Verdict::NonCausal);
    for (auto& pt : pts) pt.value = {};
    r = summarize_leakage(Observable::Field, pts);
    CHECK(r.vacuous);
    CHECK(r.verdict == Verdict::Causal);
}

TEST_CASE("leakage verdicts on the default grid") {
    const QuadratureSpec spec;
    const GridSpec g;
    CHECK(leakage_scan(Observable::Field, g, spec).verdict == Verdict::Causal);
    const LeakageReport nw = leakage_scan(Observable::NwDensity, g, spec);
    CHECK(nw.verdict == Verdict::NonCausal);
    CHECK(nw.n_points == 1600);
    CHECK(leakage_scan(Observable::GlauberDensity, g, spec).verdict == Verdict::NonCausal);
}

TEST_CASE("verdicts are invariant under refinement and coupling scale") {
    const QuadratureSpec spec;
    const GridSpec coarse = small_grid(20);
    GridSpec fine = small_grid(40);
    GridSpec strong = coarse;
    strong.g = 2.0 * coarse.g;
    for (Observable o : leakage_observables()) {
        const LeakageReport a = leakage_scan(o, coarse, spec);
        const LeakageReport b = leakage_scan(o, fine, spec);
        const LeakageReport c = leakage_scan(o, strong, spec);
        CHECK_MESSAGE(a.verdict == expected_verdict(o), to_string(o));
        CHECK_MESSAGE(b.verdict == a.verdict, to_string(o));
        CHECK_MESSAGE(c.verdict == a.verdict, to_string(o));
        if (a.verdict == Verdict::NonCausal) {
            CHECK(c.leakage_ratio == doctest::Approx(a.leakage_ratio).epsilon(1e-9));
        }
    }
}

TEST_CASE("decay_fit") {
    std::vector<std::pair<double, double>> s;
    for (int i = 1; i <= 10; ++i) s.emplace_back(i, std::exp(-double(i)));
    const DecayFit e = decay_fit(s, DecayModel::ExpSqrt);
    CHECK(e.exponent == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(e.r2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.std_error <= 1e-10);
    CHECK(e.window_min == 1.0);
    CHECK(e.window_max == 10.0);
    s.clear();
    for (int i = 1; i <= 10; ++i) s.emplace_back(0.5 * i, 3.0 * std::pow(0.5 * i, -2.0));
    CHECK(decay_fit(s, DecayModel::PowerLaw).exponent == doctest::Approx(2.0).epsilon(1e-12));
    // Noisy data: r2 below one, nonzero stderr.
    s.clear();
    for (int i = 1; i <= 10; ++i) s.emplace_back(i, std::exp(-double(i)) * (i % 2 ? 1.1 : 0.9));
    const DecayFit noisy = decay_fit(s, DecayModel::ExpSqrt);
    CHECK(noisy.r2 < 1.0);
    CHECK(noisy.r2 > 0.9);
    CHECK(noisy.std_error > 0.0);
    s.resize(4);
    CHECK_THROWS_AS(decay_fit(s, DecayModel::ExpSqrt), DomainError);
    s = {{1, 1}, {2, 0.5}, {3, -0.1}, {4, 0.1}, {5, 0.05}};
    CHECK_THROWS_AS(decay_fit(s, DecayModel::ExpSqrt), DomainError);
    s = {{0, 1}, {2, 0.5}, {3, 0.1}, {4, 0.1}, {5, 0.05}};
    CHECK_THROWS_AS(decay_fit(s, DecayModel::PowerLaw), DomainError);
}

TEST_CASE("fit targets") {
    const QuadratureSpec spec;
    const FieldParams p;
    for (FitTarget t : {FitTarget::NwSpacelike, FitTarget::NwTimelikePhase,
                        FitTarget::VacuumPowerlaw, FitTarget::WightmanSpacelike}) {
        const FitReport r = run_fit(t, p, spec);
        CHECK_MESSAGE(r.pass, to_string(t));
        CHECK(parse_fit_target(to_string(t)) == t);
    }
    const FitReport w2 = run_fit(FitTarget::WightmanSpacelike, FieldParams{2.0, 0.1, 20.0}, spec);
    CHECK(w2.measured == doctest::Approx(2.0).epsilon(0.02));
    const FitReport vp = run_fit(FitTarget::VacuumPowerlaw, p, spec);
    CHECK(vp.measured == doctest::Approx(2.0).epsilon(0.01));
    CHECK_THROWS_AS(run_fit(FitTarget::NwSpacelike, FieldParams{0.0, 0.1, 20.0}, spec),
                    DomainError);
}

TEST_CASE("verdict table on a coarse grid") {
    const QuadratureSpec spec;
    const VerdictTable t = verdict_table(small_grid(12), spec);
    REQUIRE(t.rows.size() == 9);
    CHECK(t.all_match);
    CHECK(t.warnings.empty());
    for (const TableRow& row : t.rows) {
        const bool has_vacuum = row.observable == Observable::IntensitySource ||
                                row.observable == Observable::EnergySource;
        CHECK(row.vacuum_part.has_value() == has_vacuum);
    }
    SUBCASE("zero coupling is vacuous and cannot reproduce the non-causal rows") {
        GridSpec g = small_grid(12);
        g.g = 0.0;
        const VerdictTable z = verdict_table(g, spec);
        CHECK_FALSE(z.all_match);
        CHECK_FALSE(z.warnings.empty());
        for (const TableRow& row : z.rows) {
            if (is_source_dependent(row.observable)) CHECK(row.report.vacuous);
        }
    }
    SUBCASE("an exact-zero threshold trips the causal rows") {
        const VerdictTable z = verdict_table(small_grid(12), spec, {1e-30, 1e-12});
        CHECK_FALSE(z.all_match);
        CHECK_FALSE(z.rows[0].matches);
    }
}
