#include "tq/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tq {

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("CMatrix: dimensions must be positive");
    }
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("CMatrix: dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument("CMatrix: entry count does not match dimensions");
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Complex CMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix is not square");
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
    }
    return m;
}

double CMatrix::hermiticity_defect() const {
    if (rows_ != cols_) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("operator+=: dimension mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("operator-=: dimension mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("operator*: dimension mismatch");
    CMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

CMatrix partial_transpose(const CMatrix& rho, Subsystem subsystem) {
    if (rho.rows() != 9 || rho.cols() != 9) {
        throw std::invalid_argument("partial_transpose: expected a 9x9 matrix");
    }
    CMatrix out(9, 9);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t jp = 0; jp < 3; ++jp)
                for (std::size_t kp = 0; kp < 3; ++kp) {
                    if (subsystem == Subsystem::A) {
                        out(3 * j + k, 3 * jp + kp) = rho(3 * jp + k, 3 * j + kp);
                    } else {
                        out(3 * j + k, 3 * jp + kp) = rho(3 * j + kp, 3 * jp + k);
                    }
                }
    return out;
}

namespace {

double off_diagonal_frobenius(const CMatrix& h) {
    double sum = 0.0;
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (r != c) sum += std::norm(h(r, c));
    return std::sqrt(sum);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
    }
    const double defect = h.hermiticity_defect();
    if (defect > tol::kHermitian) {
        throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian (defect " +
                                    std::to_string(defect) + ")");
    }

    const std::size_t n = h.rows();
    CMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));

    constexpr int kMaxSweeps = 50;
    double off = off_diagonal_frobenius(a);
    for (int sweep = 0; sweep < kMaxSweeps && off > tol::kJacobiOffDiag; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r < 1e-18) continue;

                // Peel the phase off a(p,q), then a real Givens rotation
                // zeroes the remaining symmetric 2x2 off-diagonal.
                const Complex phase = apq / r;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex phase_conj = std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {  // columns p,q of every row
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * phase_conj * akq;
                    a(k, q) = s * akp + c * phase_conj * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // rows p,q of every column
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                a(p, q) = Complex{0.0, 0.0};
                a(q, p) = Complex{0.0, 0.0};
            }
        }
        off = off_diagonal_frobenius(a);
    }
    if (off > tol::kJacobiOffDiag) {
        throw std::runtime_error("hermitian_eigenvalues: Jacobi sweep limit reached, residual " +
                                 std::to_string(off));
    }

    std::vector<double> lambdas(n);
    for (std::size_t i = 0; i < n; ++i) lambdas[i] = a(i, i).real();
    std::sort(lambdas.begin(), lambdas.end());
    return lambdas;
}

Complex expectation(const CMatrix& m, const CMatrix& rho) {
    if (m.rows() != m.cols() || rho.rows() != rho.cols() || m.rows() != rho.rows()) {
        throw std::invalid_argument("expectation: dimension mismatch");
    }
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t += m(i, j) * rho(j, i);
    return t;
}

}  // namespace tq
