#pragma once

#include <array>

#include "tq/states.hpp"

namespace tq {

/// Basis phases (alpha1, alpha2, beta1, beta2) for the two measurement
/// settings per party. The defaults (0, 1/2, 1/4, -1/4) keep all four bases
/// non-degenerate.
struct MeasurementPhases {
    double alpha1 = 0.0;
    double alpha2 = 0.5;
    double beta1 = 0.25;
    double beta2 = -0.25;

    static MeasurementPhases defaults() { return {}; }
};

enum class Party { Alice, Bob };

/// One measurement slot: party, setting (1 or 2), outcome (0..2).
struct MeasurementContext {
    Party party;
    int setting;
    int outcome;

    MeasurementContext(Party party, int setting, int outcome);
};

/// Basis vector for the context. Alice, setting s, outcome o: component
/// n = omega^(n(o+alpha_s))/sqrt(3); Bob uses omega^(n(-o+beta_s))/sqrt(3).
std::array<Complex, 3> measurement_vector(const MeasurementContext& ctx,
                                          const MeasurementPhases& phases);

/// Rank-1 projector |v><v| onto the measurement vector.
CMatrix projector(const MeasurementContext& ctx, const MeasurementPhases& phases);

/// P(A_{a_setting} = a_out, B_{b_setting} = b_out) = Tr[(Pi_A (x) Pi_B) rho].
double joint_probability(const DensityMatrix& rho, int a_setting, int b_setting, int a_out,
                         int b_out, const MeasurementPhases& phases);

/// The Bell functional
///   I3 = [P(A1=B1) + P(B1=A2+1) + P(A2=B2) + P(B2=A1)]
///      - [P(A1=B1-1) + P(B1=A2) + P(A2=B2-1) + P(B2=A1-1)]
/// with outcome arithmetic mod 3. Values above 2 witness nonlocality.
double cglmp_i3(const DensityMatrix& rho, const MeasurementPhases& phases);

/// Precomputes the 36 joint-measurement kernels for a fixed set of phases so
/// repeated evaluations (sweeps, scans) skip the projector rebuild.
class BellEvaluator {
public:
    explicit BellEvaluator(const MeasurementPhases& phases);

    double i3(const DensityMatrix& rho) const;
    double joint_probability(const DensityMatrix& rho, int a_setting, int b_setting, int a_out,
                             int b_out) const;

private:
    // kernels_[a_setting-1][b_setting-1][a_out][b_out] = Pi_A (x) Pi_B
    std::array<std::array<std::array<std::array<CMatrix, 3>, 3>, 2>, 2> kernels_;
};

}  // namespace tq
