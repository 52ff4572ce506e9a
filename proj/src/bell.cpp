#include "tq/bell.hpp"

#include <cmath>
#include <stdexcept>

#include "tq/omega.hpp"

namespace tq {

MeasurementContext::MeasurementContext(Party party_, int setting_, int outcome_)
    : party(party_), setting(setting_), outcome(outcome_) {
    if (setting != 1 && setting != 2) {
        throw std::invalid_argument("MeasurementContext: setting must be 1 or 2");
    }
    if (outcome < 0 || outcome > 2) {
        throw std::invalid_argument("MeasurementContext: outcome must lie in {0,1,2}");
    }
}

std::array<Complex, 3> measurement_vector(const MeasurementContext& ctx,
                                          const MeasurementPhases& phases) {
    if (!std::isfinite(phases.alpha1) || !std::isfinite(phases.alpha2) ||
        !std::isfinite(phases.beta1) || !std::isfinite(phases.beta2)) {
        throw std::invalid_argument("measurement_vector: non-finite phase");
    }
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    double shift;
    double sign;
    if (ctx.party == Party::Alice) {
        shift = ctx.setting == 1 ? phases.alpha1 : phases.alpha2;
        sign = 1.0;
    } else {
        shift = ctx.setting == 1 ? phases.beta1 : phases.beta2;
        sign = -1.0;
    }
    std::array<Complex, 3> v;
    for (int n = 0; n < 3; ++n) {
        v[static_cast<std::size_t>(n)] = inv_sqrt3 * omega_power(n * (sign * ctx.outcome + shift));
    }
    return v;
}

CMatrix projector(const MeasurementContext& ctx, const MeasurementPhases& phases) {
    const auto v = measurement_vector(ctx, phases);
    CMatrix p(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) p(i, j) = v[i] * std::conj(v[j]);
    return p;
}

double joint_probability(const DensityMatrix& rho, int a_setting, int b_setting, int a_out,
                         int b_out, const MeasurementPhases& phases) {
    const CMatrix pa = projector(MeasurementContext(Party::Alice, a_setting, a_out), phases);
    const CMatrix pb = projector(MeasurementContext(Party::Bob, b_setting, b_out), phases);
    return expectation(kron(pa, pb), rho.matrix()).real();
}

BellEvaluator::BellEvaluator(const MeasurementPhases& phases) {
    for (int as = 1; as <= 2; ++as)
        for (int bs = 1; bs <= 2; ++bs)
            for (int ao = 0; ao < 3; ++ao)
                for (int bo = 0; bo < 3; ++bo) {
                    const CMatrix pa =
                        projector(MeasurementContext(Party::Alice, as, ao), phases);
                    const CMatrix pb = projector(MeasurementContext(Party::Bob, bs, bo), phases);
                    kernels_[as - 1][bs - 1][static_cast<std::size_t>(ao)]
                            [static_cast<std::size_t>(bo)] = kron(pa, pb);
                }
}

double BellEvaluator::joint_probability(const DensityMatrix& rho, int a_setting, int b_setting,
                                        int a_out, int b_out) const {
    const auto& k = kernels_[a_setting - 1][b_setting - 1][static_cast<std::size_t>(a_out)]
                            [static_cast<std::size_t>(b_out)];
    return expectation(k, rho.matrix()).real();
}

double BellEvaluator::i3(const DensityMatrix& rho) const {
    const auto p = [&](int as, int ao, int bs, int bo) {
        return joint_probability(rho, as, bs, ao, bo);
    };
    // Each aggregate expands into three joint probabilities with the matching
    // outcomes mod 3.
    const double plus = (p(1, 0, 1, 0) + p(1, 1, 1, 1) + p(1, 2, 1, 2))    // A1 = B1
                        + (p(2, 0, 1, 1) + p(2, 1, 1, 2) + p(2, 2, 1, 0))  // B1 = A2 + 1
                        + (p(2, 0, 2, 0) + p(2, 1, 2, 1) + p(2, 2, 2, 2))  // A2 = B2
                        + (p(1, 0, 2, 0) + p(1, 1, 2, 1) + p(1, 2, 2, 2)); // B2 = A1
    const double minus = (p(1, 2, 1, 0) + p(1, 0, 1, 1) + p(1, 1, 1, 2))    // A1 = B1 - 1
                         + (p(2, 0, 1, 0) + p(2, 1, 1, 1) + p(2, 2, 1, 2))  // B1 = A2
                         + (p(2, 2, 2, 0) + p(2, 0, 2, 1) + p(2, 1, 2, 2))  // A2 = B2 - 1
                         + (p(1, 0, 2, 2) + p(1, 1, 2, 0) + p(1, 2, 2, 1)); // B2 = A1 - 1
    return plus - minus;
}

double cglmp_i3(const DensityMatrix& rho, const MeasurementPhases& phases) {
    return BellEvaluator(phases).i3(rho);
}

}  // namespace tq
