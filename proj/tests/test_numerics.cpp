#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "tq/cmatrix.hpp"
#include "tq/states.hpp"

using namespace tq;

namespace {

std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed0001);
    return gen;
}

// Entries are small multiples of 1/16, so products of up to three factors are
// exact in double precision.
CMatrix random_dyadic(std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> d(-16, 16);
    CMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Complex{d(rng()) / 16.0, d(rng()) / 16.0};
    return m;
}

CMatrix random_hermitian(std::size_t n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    CMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        m(r, r) = d(rng());
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex v{d(rng()), d(rng())};
            m(r, c) = v;
            m(c, r) = std::conj(v);
        }
    }
    return m;
}

CMatrix shift_matrix() {
    CMatrix x(3, 3);
    x(1, 0) = 1.0;
    x(2, 1) = 1.0;
    x(0, 2) = 1.0;
    return x;
}

CMatrix basis_column(std::size_t dim, std::size_t index) {
    CMatrix v(dim, 1);
    v(index, 0) = 1.0;
    return v;
}

}  // namespace

TEST_CASE("kron identity and dimensions") {
    const CMatrix i3 = CMatrix::identity(3);
    const CMatrix i9 = kron(i3, i3);
    CHECK(i9.rows() == 9);
    CHECK(i9.cols() == 9);
    CHECK(i9.max_abs_diff(CMatrix::identity(9)) == 0.0);

    const CMatrix a = random_dyadic(3, 3);
    CHECK(kron(a, i3).rows() == 9);
    CHECK(kron(a, i3).cols() == 9);
}

TEST_CASE("kron of the shift matrix acts on the first qutrit") {
    const CMatrix op = kron(shift_matrix(), CMatrix::identity(3));
    for (std::size_t k = 0; k < 3; ++k) {
        const CMatrix out = op * basis_column(9, 0 * 3 + k);  // |0k> -> |1k>
        CHECK(out.max_abs_diff(basis_column(9, 1 * 3 + k)) == 0.0);
    }
}

TEST_CASE("kron entry map") {
    const CMatrix a = random_dyadic(3, 3);
    const CMatrix b = random_dyadic(3, 3);
    const CMatrix k = kron(a, b);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t l = 0; l < 3; ++l)
                for (std::size_t m = 0; m < 3; ++m)
                    CHECK(k(i * 3 + l, j * 3 + m) == a(i, j) * b(l, m));
}

TEST_CASE("kron is associative entrywise") {
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix a = random_dyadic(2, 3);
        const CMatrix b = random_dyadic(3, 2);
        const CMatrix c = random_dyadic(2, 2);
        CHECK(kron(kron(a, b), c).max_abs_diff(kron(a, kron(b, c))) == 0.0);
    }
}

TEST_CASE("partial transpose of a diagonal matrix is itself") {
    CMatrix d(9, 9);
    for (std::size_t i = 0; i < 9; ++i) d(i, i) = Complex{static_cast<double>(i), 0.5};
    CHECK(partial_transpose(d, Subsystem::A).max_abs_diff(d) == 0.0);
    CHECK(partial_transpose(d, Subsystem::B).max_abs_diff(d) == 0.0);
}

TEST_CASE("partial transpose index map on |00><11|") {
    CMatrix m(9, 9);
    m(0, 4) = 1.0;  // |00><11|
    const CMatrix pt = partial_transpose(m, Subsystem::A);
    CMatrix expected(9, 9);
    expected(3, 1) = 1.0;  // |10><01|
    CHECK(pt.max_abs_diff(expected) == 0.0);
}

TEST_CASE("partial transpose reproduces the sparsity pattern of the mixed family") {
    const AittsParams params(0.7, 1.3, 0.6);
    const AittsCoefficients c = aitts_coefficients(params);
    const CMatrix pt = partial_transpose(aitts(params).matrix(), Subsystem::A);

    CMatrix expected(9, 9);
    const double diag[9] = {c.kappa1, c.epsilon, c.epsilon, c.epsilon, c.kappa2,
                            c.epsilon, c.epsilon, c.epsilon, c.kappa3};
    for (std::size_t i = 0; i < 9; ++i) expected(i, i) = diag[i];
    expected(1, 3) = expected(3, 1) = c.tau1;
    expected(2, 6) = expected(6, 2) = c.tau2;
    expected(5, 7) = expected(7, 5) = c.tau3;
    CHECK(pt.max_abs_diff(expected) < 1e-15);
}

TEST_CASE("partial transpose is an involution and symmetric for the mixed family") {
    std::uniform_real_distribution<double> ang(0.0, 6.28);
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const AittsParams params(ang(rng()), ang(rng()), weight(rng()));
        const CMatrix rho = aitts(params).matrix();
        const CMatrix pt_a = partial_transpose(rho, Subsystem::A);
        CHECK(partial_transpose(pt_a, Subsystem::A).max_abs_diff(rho) == 0.0);
        CHECK(pt_a.max_abs_diff(partial_transpose(rho, Subsystem::B)) < 1e-14);
    }
    const CMatrix m = random_dyadic(9, 9);
    CHECK(partial_transpose(partial_transpose(m, Subsystem::B), Subsystem::B).max_abs_diff(m) ==
          0.0);
}

TEST_CASE("partial transpose rejects wrong dimensions") {
    CHECK_THROWS_AS((void)partial_transpose(CMatrix::identity(3), Subsystem::A),
                    std::invalid_argument);
}

TEST_CASE("eigenvalues of the identity") {
    const auto lambdas = hermitian_eigenvalues(CMatrix::identity(9));
    REQUIRE(lambdas.size() == 9);
    for (double l : lambdas) CHECK(l == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigenvalues of a diagonal matrix are its sorted entries") {
    const double entries[9] = {3.5, -1.25, 0.0, 7.0, -2.5, 1.0, 0.5, -0.75, 2.0};
    CMatrix d(9, 9);
    for (std::size_t i = 0; i < 9; ++i) d(i, i) = entries[i];
    std::vector<double> expected(entries, entries + 9);
    std::sort(expected.begin(), expected.end());
    const auto lambdas = hermitian_eigenvalues(d);
    for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(lambdas[i] - expected[i]) < 1e-14);
}

TEST_CASE("partial transpose spectrum of the maximally entangled direction at p=1") {
    const AittsParams iso(std::acos(1.0 / std::sqrt(3.0)), std::numbers::pi / 4, 1.0);
    const auto lambdas =
        hermitian_eigenvalues(partial_transpose(aitts(iso).matrix(), Subsystem::A));
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(lambdas[i] + 1.0 / 3.0) < 1e-10);
    for (std::size_t i = 3; i < 9; ++i) CHECK(std::abs(lambdas[i] - 1.0 / 3.0) < 1e-10);
}

TEST_CASE("random Hermitian matrices: trace identities") {
    for (int trial = 0; trial < 200; ++trial) {
        const CMatrix h = random_hermitian(9);
        const auto lambdas = hermitian_eigenvalues(h);

        double sum = 0.0;
        double sum_sq = 0.0;
        for (double l : lambdas) {
            sum += l;
            sum_sq += l * l;
        }
        CHECK(std::abs(sum - h.trace().real()) < 1e-10);
        CHECK(std::abs(sum_sq - (h * h).trace().real()) < 1e-9);
    }
}

TEST_CASE("eigensolver rejects non-Hermitian input") {
    CMatrix m(2, 2);
    m(0, 1) = 1.0;  // strictly upper triangular entry with no mirror
    CHECK_THROWS_AS((void)hermitian_eigenvalues(m), std::invalid_argument);
}

TEST_CASE("expectation values") {
    CHECK(expectation(CMatrix::identity(9), noise_state().matrix()).real() ==
          doctest::Approx(1.0).epsilon(1e-14));

    CMatrix proj00(9, 9);
    proj00(0, 0) = 1.0;
    CHECK(expectation(proj00, noise_state().matrix()).real() ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-14));

    CHECK_THROWS_AS((void)expectation(CMatrix::identity(3), CMatrix::identity(9)),
                    std::invalid_argument);
}
