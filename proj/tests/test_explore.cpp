#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tq/explore.hpp"

using namespace tq;
using std::numbers::pi;

namespace {

const double kIsoTheta = std::acos(1.0 / std::sqrt(3.0));

}  // namespace

TEST_CASE("sweep values along the maximally entangled direction") {
    const auto grid = linspace(0.0, 1.0, 5);

    const auto e_curve = sweep_p(kIsoTheta, pi / 4, grid, Metric::entanglement());
    REQUIRE(e_curve.size() == 5);
    CHECK(e_curve.front().p == 0.0);
    CHECK(e_curve.back().p == 1.0);
    CHECK(e_curve.front().value == 0.0);
    CHECK(e_curve.back().value == doctest::Approx(1.0).epsilon(1e-10));

    const auto n_curve = sweep_p(kIsoTheta, pi / 4, std::vector<double>{0.75},
                                 Metric::wigner_negativity(WignerConvention::PaperFractional));
    CHECK(n_curve[0].value == doctest::Approx(2.0 / 9.0).epsilon(1e-9));
}

TEST_CASE("all metrics vanish at p=0") {
    const std::vector<Metric> metrics = {
        Metric::entanglement(), Metric::wigner_negativity(WignerConvention::PaperFractional),
        Metric::bell_i3(MeasurementPhases::defaults())};
    for (const auto& metric : metrics) {
        const MetricEvaluator eval(metric);
        for (double theta : linspace(0.0, pi, 5)) {
            for (double phi : linspace(0.0, 2.0 * pi, 9)) {
                CHECK(std::abs(eval.at(theta, phi, 0.0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("sweeps of the dominance measures are non-decreasing in p") {
    const auto grid = linspace(0.0, 1.0, 51);
    const std::vector<Metric> metrics = {
        Metric::entanglement(), Metric::wigner_negativity(WignerConvention::PaperFractional)};
    for (const auto& metric : metrics) {
        for (const auto& entry : catalog()) {
            if (!entry.theta) continue;
            const auto curve = sweep_p(*entry.theta, *entry.phi, grid, metric);
            for (std::size_t i = 1; i < curve.size(); ++i) {
                CHECK(curve[i].value >= curve[i - 1].value - 1e-10);
            }
        }
    }
}

TEST_CASE("Bell sweeps scale linearly with p") {
    const auto grid = linspace(0.0, 1.0, 21);
    const Metric bell = Metric::bell_i3(MeasurementPhases::defaults());
    for (const auto& entry : catalog()) {
        if (!entry.theta) continue;
        const auto curve = sweep_p(*entry.theta, *entry.phi, grid, bell);
        const double slope = curve.back().value;
        for (const auto& s : curve) CHECK(std::abs(s.value - s.p * slope) < 1e-10);
    }
}

TEST_CASE("thresholds") {
    const Metric wig = Metric::wigner_negativity(WignerConvention::PaperFractional);
    const auto n_iso = find_threshold(kIsoTheta, pi / 4, wig, 0.0);
    REQUIRE(n_iso.has_value());
    CHECK(*n_iso == doctest::Approx(0.5).epsilon(1e-6));

    const Metric bell = Metric::bell_i3(MeasurementPhases::defaults());
    const auto b_iso = find_threshold(kIsoTheta, pi / 4, bell, 2.0);
    REQUIRE(b_iso.has_value());
    CHECK(*b_iso == doctest::Approx(0.696152).epsilon(1e-5));

    const auto b_opt = find_threshold(0.906006, 0.67002, bell, 2.0);
    REQUIRE(b_opt.has_value());
    CHECK(*b_opt == doctest::Approx(0.686141).epsilon(1e-4));

    CHECK_FALSE(find_threshold(pi / 2, 0.0, Metric::entanglement(), 0.0).has_value());
}

TEST_CASE("breakpoint detection") {
    const auto grid = linspace(0.0, 1.0, 501);

    const Metric wig = Metric::wigner_negativity(WignerConvention::PaperFractional);
    const auto wl3 = detect_breakpoints(sweep_p(pi / 2, pi / 4, grid, wig));
    REQUIRE(wl3.size() == 2);
    CHECK(std::abs(wl3[0] - 0.285714) < 1e-3);
    CHECK(std::abs(wl3[1] - 0.5) < 1e-3);

    const auto el5 = detect_breakpoints(sweep_p(kIsoTheta, pi / 4, grid, Metric::entanglement()));
    REQUIRE(el5.size() == 1);
    CHECK(std::abs(el5[0] - 0.25) < 1e-3);

    const auto el1 = detect_breakpoints(sweep_p(pi / 2, 0.0, grid, Metric::entanglement()));
    CHECK(el1.empty());

    std::vector<CurveSample> few = {{0.0, 0.0}, {0.5, 0.1}, {1.0, 0.2}};
    CHECK_THROWS_AS((void)detect_breakpoints(few), std::invalid_argument);

    std::vector<CurveSample> uneven = {{0.0, 0.0}, {0.1, 0.0}, {0.3, 0.0}, {0.4, 0.0}, {0.5, 0.0}};
    CHECK_THROWS_AS((void)detect_breakpoints(uneven), std::invalid_argument);
}

TEST_CASE("region masks") {
    const Metric bell = Metric::bell_i3(MeasurementPhases::defaults());

    // Below the global onset no direction is feasible.
    const auto low = region_mask(bell, 2.0, linspace(0.0, pi, 19), linspace(0.0, 2.0 * pi, 37),
                                 {0.6}, 1);
    CHECK(low.count_true() == 0);

    // At p=1 the feasible set is non-empty.
    const auto high = region_mask(bell, 2.0, linspace(0.0, pi, 19), linspace(0.0, 2.0 * pi, 37),
                                  {1.0}, 1);
    CHECK(high.count_true() > 0);

    const auto ent0 = region_mask(Metric::entanglement(), 0.0, linspace(0.0, pi, 9),
                                  linspace(0.0, 2.0 * pi, 17), {0.0}, 1);
    CHECK(ent0.count_true() == 0);

    CHECK_THROWS_AS((void)region_mask(bell, 2.0, {}, {0.0}, {0.0}, 1), std::invalid_argument);
}

TEST_CASE("region masks are identical across thread counts") {
    const Metric wig = Metric::wigner_negativity(WignerConvention::PaperFractional);
    const auto theta = linspace(0.0, pi, 13);
    const auto phi = linspace(0.0, 2.0 * pi, 11);
    const auto p = linspace(0.0, 1.0, 7);
    const auto base = region_mask(wig, 0.1, theta, phi, p, 1);
    for (int threads : {2, 4, 8}) {
        const auto other = region_mask(wig, 0.1, theta, phi, p, threads);
        CHECK(other.mask == base.mask);
    }
}

TEST_CASE("maximizing the Bell functional finds both optima") {
    const auto result = maximize_i3(MeasurementPhases::defaults());
    CHECK(result.best.value == doctest::Approx(2.91485).epsilon(1e-4));
    CHECK(std::abs(result.best.theta - 0.906006) < 1e-2);
    CHECK(std::abs(result.best.phi - 0.67002) < 1e-2);

    REQUIRE(result.optima.size() >= 2);
    CHECK(std::abs(result.optima[1].theta - 2.23559) < 1e-2);
    CHECK(std::abs(result.optima[1].phi - 3.81161) < 1e-2);
    CHECK(result.optima[1].value == doctest::Approx(result.best.value).epsilon(1e-6));
}

TEST_CASE("maximizing the entanglement measure") {
    const auto result = maximize_metric(Metric::entanglement());
    CHECK(result.best.value == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(std::abs(result.best.theta - 0.955317) < 1e-2);
    CHECK(std::abs(result.best.phi - 0.785398) < 1e-2);
}

TEST_CASE("contour tables") {
    const std::vector<double> thetas = {pi / 4, pi / 2};
    const std::vector<double> phis = {pi / 4, pi};
    const auto ent = contour_grid(Metric::entanglement(), thetas, phis);
    CHECK(ent.values[1 * 2 + 0] == doctest::Approx(0.5).epsilon(1e-10));  // (pi/2, pi/4)
    CHECK(ent.iso2.empty());

    const auto bell = contour_grid(Metric::bell_i3(MeasurementPhases::defaults()), thetas, phis);
    CHECK(bell.values[0 * 2 + 1] == doctest::Approx(-2.0).epsilon(1e-9));  // (pi/4, pi)
    CHECK(bell.iso2.size() == bell.values.size());

    // The level-2 line passes somewhere on a fuller grid.
    const auto full = contour_grid(Metric::bell_i3(MeasurementPhases::defaults()),
                                   linspace(0.0, pi, 19), linspace(0.0, 2.0 * pi, 37));
    std::size_t crossings = 0;
    for (auto f : full.iso2) crossings += f;
    CHECK(crossings > 0);
}

TEST_CASE("pure-state negativity is pi-periodic in theta on a sampled grid") {
    const MetricEvaluator ent(Metric::entanglement());
    for (double theta : linspace(0.0, pi, 13)) {
        for (double phi : linspace(0.0, 2.0 * pi, 13)) {
            CHECK(std::abs(ent.at(theta, phi, 1.0) - ent.at(theta + pi, phi, 1.0)) < 1e-10);
        }
    }
}

TEST_CASE("linspace endpoints") {
    const auto g = linspace(0.25, 0.75, 3);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == 0.25);
    CHECK(g[1] == 0.5);
    CHECK(g[2] == 0.75);
    CHECK(linspace(1.0, 2.0, 1) == std::vector<double>{1.0});
    CHECK_THROWS_AS((void)linspace(0.0, 1.0, 0), std::invalid_argument);
}
