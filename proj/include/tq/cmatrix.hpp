#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace tq {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Sized for two-qutrit work (dim <= 9),
/// so everything is plain loops over contiguous storage.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Complex>& entries() const { return entries_; }

    CMatrix adjoint() const;
    Complex trace() const;

    /// max_ij |a_ij - b_ij|
    double max_abs_diff(const CMatrix& other) const;
    /// max_ij |a_ij - a*_ji|
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator-=(const CMatrix& rhs);
    CMatrix& operator*=(Complex scalar);

    friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
    friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
    friend CMatrix operator*(Complex scalar, CMatrix m) { return m *= scalar; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Kronecker product: out((i*b.rows+k),(j*b.cols+l)) = a(i,j) * b(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

enum class Subsystem { A, B };

/// Partial transpose of a 9x9 two-qutrit matrix in the |jk> <-> 3j+k basis.
/// Subsystem A: out[(j,k),(j',k')] = in[(j',k),(j,k')]; B transposes the second index.
CMatrix partial_transpose(const CMatrix& rho, Subsystem subsystem);

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi with complex
/// 2x2 rotations; converges when the off-diagonal Frobenius mass drops below
/// 1e-14 (at most 50 sweeps). Throws std::invalid_argument if the input is
/// not Hermitian within 1e-12, std::runtime_error on non-convergence.
std::vector<double> hermitian_eigenvalues(const CMatrix& h);

/// Tr(m * rho).
Complex expectation(const CMatrix& m, const CMatrix& rho);

namespace tol {
inline constexpr double kHermitian = 1e-12;      // construction-time Hermiticity gate
inline constexpr double kJacobiOffDiag = 1e-14;  // eigensolver convergence
inline constexpr double kNegativeEigenvalue = 1e-10;  // lambda < -kNegativeEigenvalue counts as negative
}  // namespace tol

}  // namespace tq
