#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tq/bell.hpp"
#include "tq/omega.hpp"

using namespace tq;
using std::numbers::pi;

namespace {

std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed0005);
    return gen;
}

const double kIsoTheta = std::acos(1.0 / std::sqrt(3.0));

MeasurementPhases random_phases() {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    return {d(rng()), d(rng()), d(rng()), d(rng())};
}

AittsParams random_params() {
    std::uniform_real_distribution<double> ang(-7.0, 7.0);
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    return AittsParams(ang(rng()), ang(rng()), weight(rng()));
}

}  // namespace

TEST_CASE("measurement vectors") {
    const MeasurementPhases zero{0.0, 0.0, 0.0, 0.0};
    const auto v = measurement_vector(MeasurementContext(Party::Alice, 1, 0), zero);
    for (const auto& c : v) CHECK(std::abs(c - Complex{1.0 / std::sqrt(3.0), 0.0}) < 1e-15);

    // Distinct outcomes of the same setting are orthogonal.
    const MeasurementPhases phases = random_phases();
    for (auto party : {Party::Alice, Party::Bob}) {
        for (int setting : {1, 2}) {
            for (int o1 = 0; o1 < 3; ++o1) {
                const auto a = measurement_vector(MeasurementContext(party, setting, o1), phases);
                for (int o2 = o1 + 1; o2 < 3; ++o2) {
                    const auto b =
                        measurement_vector(MeasurementContext(party, setting, o2), phases);
                    Complex dot{0.0, 0.0};
                    for (std::size_t n = 0; n < 3; ++n) dot += std::conj(a[n]) * b[n];
                    CHECK(std::abs(dot) < 1e-14);
                }
            }
        }
    }

    // Bob's components carry omega^{n(-outcome + beta)}.
    const MeasurementPhases named{0.0, 0.0, 0.59, 0.0};
    const auto bob = measurement_vector(MeasurementContext(Party::Bob, 1, 2), named);
    for (int n = 0; n < 3; ++n) {
        CHECK(std::abs(bob[static_cast<std::size_t>(n)] -
                       omega_power(n * (-2.0 + 0.59)) / std::sqrt(3.0)) < 1e-15);
    }
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(MeasurementContext(Party::Alice, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(MeasurementContext(Party::Bob, 1, 5), std::invalid_argument);
}

TEST_CASE("projector algebra") {
    const MeasurementPhases phases = MeasurementPhases::defaults();
    for (auto party : {Party::Alice, Party::Bob}) {
        for (int setting : {1, 2}) {
            CMatrix sum(3, 3);
            for (int outcome = 0; outcome < 3; ++outcome) {
                const CMatrix p = projector(MeasurementContext(party, setting, outcome), phases);
                CHECK((p * p).max_abs_diff(p) < 1e-13);
                CHECK(std::abs(p.trace() - Complex{1.0, 0.0}) < 1e-13);
                CHECK(p.hermiticity_defect() < 1e-14);
                sum += p;
            }
            CHECK(sum.max_abs_diff(CMatrix::identity(3)) < 1e-13);
        }
    }
}

TEST_CASE("projector entries match the closed forms") {
    // Alice setting 1, outcome j: entry (0,1) is omega^{-j-alpha1}/3.
    const MeasurementPhases phases{0.37, 0.0, 0.59, 0.0};
    for (int j = 0; j < 3; ++j) {
        const CMatrix p = projector(MeasurementContext(Party::Alice, 1, j), phases);
        CHECK(std::abs(p(0, 1) - omega_power(-j - 0.37) / 3.0) < 1e-14);
        CHECK(std::abs(p(2, 0) - omega_power(2 * (j + 0.37)) / 3.0) < 1e-14);
    }
    // Bob setting 1, outcome l: entry (0,1) is omega^{l-beta1}/3.
    for (int l = 0; l < 3; ++l) {
        const CMatrix p = projector(MeasurementContext(Party::Bob, 1, l), phases);
        CHECK(std::abs(p(0, 1) - omega_power(l - 0.59) / 3.0) < 1e-14);
    }
}

TEST_CASE("joint probabilities") {
    const MeasurementPhases phases = MeasurementPhases::defaults();
    for (int as : {1, 2}) {
        for (int bs : {1, 2}) {
            double total = 0.0;
            for (int ao = 0; ao < 3; ++ao) {
                for (int bo = 0; bo < 3; ++bo) {
                    const double p = joint_probability(noise_state(), as, bs, ao, bo, phases);
                    CHECK(p == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
                    total += p;
                }
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    const DensityMatrix rho = aitts(random_params());
    for (int ao = 0; ao < 3; ++ao)
        for (int bo = 0; bo < 3; ++bo) {
            const double p = joint_probability(rho, 1, 2, ao, bo, phases);
            CHECK(p >= -1e-12);
            CHECK(p <= 1.0 + 1e-12);
        }
}

TEST_CASE("no-signalling") {
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = aitts(random_params());
        const MeasurementPhases phases = trial % 2 ? random_phases()
                                                   : MeasurementPhases::defaults();
        const BellEvaluator eval(phases);
        for (int as : {1, 2}) {
            for (int ao = 0; ao < 3; ++ao) {
                double m1 = 0.0;
                double m2 = 0.0;
                for (int bo = 0; bo < 3; ++bo) {
                    m1 += eval.joint_probability(rho, as, 1, ao, bo);
                    m2 += eval.joint_probability(rho, as, 2, ao, bo);
                }
                CHECK(std::abs(m1 - m2) < 1e-12);
            }
        }
        for (int bs : {1, 2}) {
            for (int bo = 0; bo < 3; ++bo) {
                double m1 = 0.0;
                double m2 = 0.0;
                for (int ao = 0; ao < 3; ++ao) {
                    m1 += eval.joint_probability(rho, 1, bs, ao, bo);
                    m2 += eval.joint_probability(rho, 2, bs, ao, bo);
                }
                CHECK(std::abs(m1 - m2) < 1e-12);
            }
        }
    }
}

TEST_CASE("Bell functional golden values") {
    const MeasurementPhases phases = MeasurementPhases::defaults();
    CHECK(std::abs(cglmp_i3(noise_state(), phases)) < 1e-12);
    CHECK(std::abs(cglmp_i3(aitts(AittsParams(kIsoTheta, pi / 4, 1.0)), phases) - 2.87293) <
          1e-4);
    CHECK(std::abs(cglmp_i3(aitts(AittsParams(pi / 4, pi, 1.0)), phases) + 2.0) < 1e-9);
}

TEST_CASE("distinct values over the eleven directions") {
    const MeasurementPhases phases = MeasurementPhases::defaults();
    const BellEvaluator eval(phases);
    std::vector<double> values;
    for (const auto& entry : catalog()) {
        if (!entry.theta) continue;
        values.push_back(eval.i3(aitts(AittsParams(*entry.theta, *entry.phi, 1.0))));
    }
    REQUIRE(values.size() == 11);
    std::sort(values.begin(), values.end());
    std::vector<double> distinct;
    for (double v : values) {
        if (distinct.empty() || std::abs(v - distinct.back()) > 1e-6) distinct.push_back(v);
    }
    const std::vector<double> expected = {0.0, 1.0, 1.1547, 1.73205, 2.0, 2.84399, 2.87293};
    REQUIRE(distinct.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(std::abs(distinct[i] - expected[i]) < 1e-4);
    }
}

TEST_CASE("the functional is affine in the state") {
    std::uniform_real_distribution<double> mix(0.0, 1.0);
    const MeasurementPhases phases = MeasurementPhases::defaults();
    const BellEvaluator eval(phases);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p1 = random_params();
        const auto p2 = random_params();
        const double alpha = mix(rng());
        CMatrix blended = aitts(p1).matrix();
        blended *= Complex{alpha, 0.0};
        CMatrix other = aitts(p2).matrix();
        other *= Complex{1.0 - alpha, 0.0};
        blended += other;
        const double mixed = eval.i3(DensityMatrix::from_matrix(blended));
        const double expected = alpha * eval.i3(aitts(p1)) + (1.0 - alpha) * eval.i3(aitts(p2));
        CHECK(std::abs(mixed - expected) < 1e-12);
    }
}

TEST_CASE("linearity in the mixing weight") {
    const MeasurementPhases phases = MeasurementPhases::defaults();
    const BellEvaluator eval(phases);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    for (int trial = 0; trial < 20; ++trial) {
        const double theta = ang(rng());
        const double phi = ang(rng());
        const double slope = eval.i3(aitts(AittsParams(theta, phi, 1.0)));
        for (double p : {0.1, 0.5, 0.9}) {
            CHECK(std::abs(eval.i3(aitts(AittsParams(theta, phi, p))) - p * slope) < 1e-12);
        }
    }
}
