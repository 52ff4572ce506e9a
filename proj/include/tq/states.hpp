#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tq/cmatrix.hpp"

namespace tq {

/// Normalized pure two-qutrit state; amplitude c_jk lives at index 3j+k.
struct PureTwoQutrit {
    std::array<Complex, 9> amplitudes{};

    /// Validates sum |c_jk|^2 == 1 within 1e-12.
    static PureTwoQutrit from_amplitudes(const std::array<Complex, 9>& amps);

    /// |psi><psi| as a 9x9 matrix.
    CMatrix outer() const;
};

/// (theta, phi, p) for the anisotropic two-qutrit family. p must lie in [0,1];
/// angles are accepted as any finite reals (trig is total), but callers can
/// check angles_in_principal_range() to warn about out-of-range inputs.
struct AittsParams {
    double theta = 0.0;
    double phi = 0.0;
    double p = 0.0;

    AittsParams(double theta, double phi, double p);

    bool angles_in_principal_range() const;
};

/// The named entries of the density matrix: epsilon on the bulk diagonal,
/// kappa_i at the |00>,|11>,|22> diagonal slots, tau_i on the three
/// symmetric off-diagonal couplings.
struct AittsCoefficients {
    double epsilon;
    double kappa1, kappa2, kappa3;
    double tau1, tau2, tau3;
};

AittsCoefficients aitts_coefficients(const AittsParams& params);

/// 9x9 density matrix: Hermitian within 1e-12, unit trace within 1e-12,
/// and (for the validating factory) min eigenvalue >= -1e-10.
class DensityMatrix {
public:
    /// Full validation, including a positive-semidefiniteness eigencheck.
    static DensityMatrix from_matrix(CMatrix m);

    const CMatrix& matrix() const { return m_; }

private:
    struct structurally_valid_t {};
    DensityMatrix(CMatrix m, structurally_valid_t);

    friend DensityMatrix aitts(const AittsParams&);
    friend DensityMatrix noise_state();

    CMatrix m_;
};

/// psi(theta,phi) = sin(theta)cos(phi)|00> + sin(theta)sin(phi)|11> + cos(theta)|22>.
PureTwoQutrit psi(double theta, double phi);

/// rho = p |psi><psi| + (1-p)/9 * I_9. PSD and unit trace by construction,
/// so only the cheap structural checks run here.
DensityMatrix aitts(const AittsParams& params);

/// I_9 / 9.
DensityMatrix noise_state();

/// Rank of the 3x3 coefficient matrix c_jk: number of singular values > 1e-12.
int schmidt_number(const PureTwoQutrit& state);

/// Named (theta, phi) direction; `noise` carries no angles.
struct CatalogEntry {
    std::string name;
    std::optional<double> theta;
    std::optional<double> phi;
};

/// The eleven named directions plus `noise`, in catalog order
/// S1_1..S1_3, S2_1..S2_6, S3_1, S3_2, noise.
const std::vector<CatalogEntry>& catalog();

std::optional<CatalogEntry> catalog_lookup(std::string_view name);

/// Density matrix for a catalog name at mixing weight p (`noise` ignores p).
DensityMatrix state_from_name(std::string_view name, double p);

namespace tol {
inline constexpr double kUnitNorm = 1e-12;
inline constexpr double kUnitTrace = 1e-12;
inline constexpr double kSchmidtSingularValue = 1e-12;
}  // namespace tol

}  // namespace tq
