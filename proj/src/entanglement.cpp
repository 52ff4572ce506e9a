#include "tq/entanglement.hpp"

#include <cmath>

namespace tq {

PtSpectrum pt_spectrum_analytic(const AittsParams& params) {
    const AittsCoefficients c = aitts_coefficients(params);
    return PtSpectrum{{c.kappa1, c.kappa2, c.kappa3, c.epsilon - c.tau1, c.epsilon + c.tau1,
                       c.epsilon - c.tau2, c.epsilon + c.tau2, c.epsilon - c.tau3,
                       c.epsilon + c.tau3}};
}

double negativity(const DensityMatrix& rho) {
    const auto lambdas = hermitian_eigenvalues(partial_transpose(rho.matrix(), Subsystem::A));
    double abs_sum = 0.0;
    for (double l : lambdas) abs_sum += std::abs(l);
    const double e = 0.5 * (abs_sum - 1.0);
    return e < tol::kNegativeEigenvalue ? 0.0 : e;
}

std::optional<double> entanglement_threshold(double theta, double phi) {
    const auto entangled = [&](double p) {
        return negativity(aitts(AittsParams(theta, phi, p))) > 0.0;
    };
    if (!entangled(1.0)) return std::nullopt;
    // E is non-decreasing and piecewise linear in p, so plain bisection on
    // the sign of E suffices.
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-7) {
        const double mid = 0.5 * (lo + hi);
        if (entangled(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace tq
