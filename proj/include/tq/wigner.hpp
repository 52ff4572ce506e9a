#pragma once

#include <array>
#include <vector>

#include "tq/states.hpp"

namespace tq {

/// Point (x, z) of the single-qutrit phase space; both coordinates in {0,1,2}.
struct PhaseLabel {
    int x;
    int z;

    PhaseLabel(int x, int z);
};

/// Phase convention for the displacement operators D_(x,z) = phase * X^x Z^z.
///
///   PaperFractional: phase = omega^(xz/2) with the exponent taken literally
///     (omega^(1/2) = exp(i*pi/3)). The resulting phase-point operators are
///     not Hermitian, so two-qutrit grid values acquire imaginary parts for
///     general states; the quasiprobability content lives in the real parts.
///   GrossInverseTwo: phase = omega^(2xz mod 3), using the multiplicative
///     inverse of 2 mod 3. Phase-point operators are Hermitian and grids of
///     stabilizer states stay non-negative.
enum class WignerConvention { PaperFractional, GrossInverseTwo };

/// X^x Z^z: generalized shift and clock words.
CMatrix pauli_word(int x, int z);

CMatrix displacement(int x, int z, WignerConvention conv);

/// A_(ux,uz) = (1/3) sum_{vx,vz} omega^(uz*vx - ux*vz) D_(vx,vz).
CMatrix phase_point_operator(int ux, int uz, WignerConvention conv);

/// The 81-point two-qutrit grid W_(x1,z1;x2,z2). Values are kept complex;
/// see WignerConvention for when imaginary parts appear.
class DwfGrid {
public:
    static constexpr std::size_t kPoints = 81;

    Complex& at(int x1, int z1, int x2, int z2) { return values_[index(x1, z1, x2, z2)]; }
    const Complex& at(int x1, int z1, int x2, int z2) const {
        return values_[index(x1, z1, x2, z2)];
    }

    /// 9x9 presentation: row r pairs (x1 = r mod 3, x2 = r div 3), column c
    /// pairs (z1 = c mod 3, z2 = c div 3). This is the layout the CSV export
    /// uses.
    const Complex& table_at(int row, int col) const {
        return at(row % 3, col % 3, row / 3, col / 3);
    }

    const std::array<Complex, kPoints>& values() const { return values_; }

    Complex sum() const;
    double max_imag() const;

    static std::size_t index(int x1, int z1, int x2, int z2) {
        return static_cast<std::size_t>(((x1 * 3 + z1) * 3 + x2) * 3 + z2);
    }
    static std::array<int, 4> label_of(std::size_t index);

private:
    std::array<Complex, kPoints> values_{};
};

/// W_(x1,z1;x2,z2) = (1/9) Tr[(A_(x1,z1) (x) A_(x2,z2)) rho]. The grid always
/// sums to 1 (within 1e-12) because the phase-point operators resolve the
/// identity.
DwfGrid dwf(const DensityMatrix& rho, WignerConvention conv);

/// Negativity of the grid's real part: N = (sum |Re W| - 1) / 2, clamped to 0
/// when below 1e-12.
double wigner_negativity(const DensityMatrix& rho, WignerConvention conv);

/// Same, but first rejects grids whose imaginary component exceeds imag_tol;
/// the error names the offending phase point. Useful as a diagnostic under
/// conventions whose grids are expected to be real (GrossInverseTwo).
double wigner_negativity_checked(const DensityMatrix& rho, WignerConvention conv,
                                 double imag_tol);

struct DwfCluster {
    double value;  // snapped to a small-denominator fraction when one is within 1e-9
    int count;
};

/// Clusters the grid's real values with absolute tolerance 1e-9, ascending.
/// Counts sum to 81.
std::vector<DwfCluster> dwf_multiset(const DwfGrid& grid);

/// 9x9 CSV table of the grid's real parts in the table_at layout, one row per
/// line, values with 9 significant digits.
std::string dwf_table_csv(const DwfGrid& grid);

namespace tol {
inline constexpr double kDwfImag = 1e-10;     // default tolerance for the checked variant
inline constexpr double kDwfCluster = 1e-9;   // multiset clustering width
}  // namespace tol

}  // namespace tq
