#pragma once

#include <array>
#include <optional>

#include "tq/states.hpp"

namespace tq {

/// The nine eigenvalues of the partially transposed state. Sums to 1.
struct PtSpectrum {
    std::array<double, 9> lambdas;
};

/// Closed-form spectrum of the partial transpose for the anisotropic family:
/// {kappa_1, kappa_2, kappa_3, eps -/+ tau_1, eps -/+ tau_2, eps -/+ tau_3}.
/// This is the oracle path; the numeric eigensolver path below works for any
/// density matrix and is the default elsewhere.
PtSpectrum pt_spectrum_analytic(const AittsParams& params);

/// Negativity E = (sum |lambda_j| - 1) / 2 over the spectrum of rho^{T_A},
/// computed numerically. Values within 1e-10 of zero are clamped to 0.
double negativity(const DensityMatrix& rho);

/// Smallest p in [0,1] with positive negativity for the given direction,
/// located by bisection to |dp| < 1e-7; nullopt when even p=1 is separable.
std::optional<double> entanglement_threshold(double theta, double phi);

}  // namespace tq
