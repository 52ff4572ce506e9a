#include "tq/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tq {

namespace {

bool all_finite(const std::array<Complex, 9>& amps) {
    for (const auto& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
    }
    return true;
}

}  // namespace

PureTwoQutrit PureTwoQutrit::from_amplitudes(const std::array<Complex, 9>& amps) {
    if (!all_finite(amps)) {
        throw std::invalid_argument("PureTwoQutrit: non-finite amplitude");
    }
    double norm2 = 0.0;
    for (const auto& a : amps) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > tol::kUnitNorm) {
        throw std::invalid_argument("PureTwoQutrit: state is not normalized (|psi|^2 = " +
                                    std::to_string(norm2) + ")");
    }
    PureTwoQutrit s;
    s.amplitudes = amps;
    return s;
}

CMatrix PureTwoQutrit::outer() const {
    CMatrix m(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
    return m;
}

AittsParams::AittsParams(double theta_, double phi_, double p_) : theta(theta_), phi(phi_), p(p_) {
    if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(p)) {
        throw std::invalid_argument("AittsParams: non-finite parameter");
    }
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("AittsParams: p must lie in [0,1], got " + std::to_string(p));
    }
}

bool AittsParams::angles_in_principal_range() const {
    return theta >= 0.0 && theta <= std::numbers::pi && phi >= 0.0 && phi <= 2.0 * std::numbers::pi;
}

AittsCoefficients aitts_coefficients(const AittsParams& params) {
    const double st = std::sin(params.theta);
    const double ct = std::cos(params.theta);
    const double sp = std::sin(params.phi);
    const double cp = std::cos(params.phi);
    const double p = params.p;

    AittsCoefficients c{};
    c.epsilon = (1.0 - p) / 9.0;
    c.kappa1 = p * st * st * cp * cp + c.epsilon;
    c.kappa2 = p * st * st * sp * sp + c.epsilon;
    c.kappa3 = p * ct * ct + c.epsilon;
    c.tau1 = p * st * st * std::sin(2.0 * params.phi) / 2.0;
    c.tau2 = p * std::sin(2.0 * params.theta) * cp / 2.0;
    c.tau3 = p * std::sin(2.0 * params.theta) * sp / 2.0;
    return c;
}

DensityMatrix::DensityMatrix(CMatrix m, structurally_valid_t) : m_(std::move(m)) {
    if (m_.rows() != 9 || m_.cols() != 9) {
        throw std::invalid_argument("DensityMatrix: expected a 9x9 matrix");
    }
    const double defect = m_.hermiticity_defect();
    if (defect > tol::kHermitian) {
        throw std::invalid_argument("DensityMatrix: not Hermitian (defect " +
                                    std::to_string(defect) + ")");
    }
    const Complex tr = m_.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > tol::kUnitTrace) {
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
    }
}

DensityMatrix DensityMatrix::from_matrix(CMatrix m) {
    DensityMatrix rho(std::move(m), structurally_valid_t{});
    const auto lambdas = hermitian_eigenvalues(rho.m_);
    if (lambdas.front() < -tol::kNegativeEigenvalue) {
        throw std::invalid_argument("DensityMatrix: not positive semidefinite (min eigenvalue " +
                                    std::to_string(lambdas.front()) + ")");
    }
    return rho;
}

PureTwoQutrit psi(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw std::invalid_argument("psi: non-finite angle");
    }
    PureTwoQutrit s;
    s.amplitudes[0] = std::sin(theta) * std::cos(phi);
    s.amplitudes[4] = std::sin(theta) * std::sin(phi);
    s.amplitudes[8] = std::cos(theta);
    return s;
}

DensityMatrix aitts(const AittsParams& params) {
    const PureTwoQutrit pure = psi(params.theta, params.phi);
    CMatrix m = pure.outer();
    m *= Complex{params.p, 0.0};
    const double eps = (1.0 - params.p) / 9.0;
    for (std::size_t i = 0; i < 9; ++i) m(i, i) += eps;
    return DensityMatrix(std::move(m), DensityMatrix::structurally_valid_t{});
}

DensityMatrix noise_state() {
    CMatrix m = CMatrix::identity(9);
    m *= Complex{1.0 / 9.0, 0.0};
    return DensityMatrix(std::move(m), DensityMatrix::structurally_valid_t{});
}

int schmidt_number(const PureTwoQutrit& state) {
    // Gram matrix C^dagger C of the 3x3 coefficient matrix C[j][k] = c_{3j+k};
    // singular values are the square roots of its eigenvalues.
    CMatrix c(3, 3);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) c(j, k) = state.amplitudes[3 * j + k];
    const CMatrix gram = c.adjoint() * c;
    const auto lambdas = hermitian_eigenvalues(gram);
    int rank = 0;
    const double thresh = tol::kSchmidtSingularValue * tol::kSchmidtSingularValue;
    for (double l : lambdas)
        if (l > thresh) ++rank;
    return rank;
}

const std::vector<CatalogEntry>& catalog() {
    using std::numbers::pi;
    static const double iso_theta = std::acos(1.0 / std::sqrt(3.0));
    static const std::vector<CatalogEntry> entries = {
        {"S1_1", pi / 2, 0.0},
        {"S1_2", pi / 2, pi / 2},
        {"S1_3", 0.0, 0.0},  // phi is free for theta = 0; canonicalized to 0
        {"S2_1", pi / 2, pi / 4},
        {"S2_2", pi / 4, 0.0},
        {"S2_3", pi / 4, pi / 2},
        {"S2_4", pi / 2, pi / 6},
        {"S2_5", pi / 6, 0.0},
        {"S2_6", pi / 6, pi / 2},
        {"S3_1", iso_theta, pi / 4},
        {"S3_2", iso_theta, pi / 6},
        {"noise", std::nullopt, std::nullopt},
    };
    return entries;
}

std::optional<CatalogEntry> catalog_lookup(std::string_view name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    return std::nullopt;
}

DensityMatrix state_from_name(std::string_view name, double p) {
    const auto entry = catalog_lookup(name);
    if (!entry) {
        std::string names;
        for (const auto& e : catalog()) {
            if (!names.empty()) names += ", ";
            names += e.name;
        }
        throw std::invalid_argument("unknown state name '" + std::string(name) +
                                    "'; valid names: " + names);
    }
    if (!entry->theta) return noise_state();
    return aitts(AittsParams(*entry->theta, *entry->phi, p));
}

}  // namespace tq
