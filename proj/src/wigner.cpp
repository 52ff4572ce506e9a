#include "tq/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "tq/omega.hpp"

namespace tq {

namespace {

void check_range(int x, int z, const char* who) {
    if (x < 0 || x > 2 || z < 0 || z > 2) {
        throw std::invalid_argument(std::string(who) + ": coordinates must lie in {0,1,2}");
    }
}

}  // namespace

PhaseLabel::PhaseLabel(int x_, int z_) : x(x_), z(z_) { check_range(x, z, "PhaseLabel"); }

CMatrix pauli_word(int x, int z) {
    check_range(x, z, "pauli_word");
    CMatrix shift(3, 3);  // X |k> = |k+1 mod 3>
    shift(1, 0) = 1.0;
    shift(2, 1) = 1.0;
    shift(0, 2) = 1.0;
    CMatrix clock(3, 3);  // Z |k> = omega^k |k>
    clock(0, 0) = 1.0;
    clock(1, 1) = omega_power(1.0);
    clock(2, 2) = omega_power(2.0);

    CMatrix out = CMatrix::identity(3);
    for (int i = 0; i < x; ++i) out = shift * out;
    for (int i = 0; i < z; ++i) out = out * clock;
    return out;
}

CMatrix displacement(int x, int z, WignerConvention conv) {
    check_range(x, z, "displacement");
    const Complex phase = conv == WignerConvention::PaperFractional
                              ? omega_power(0.5 * x * z)
                              : omega_power(static_cast<double>((2 * x * z) % 3));
    CMatrix out = pauli_word(x, z);
    out *= phase;
    return out;
}

CMatrix phase_point_operator(int ux, int uz, WignerConvention conv) {
    check_range(ux, uz, "phase_point_operator");
    CMatrix a(3, 3);
    for (int vx = 0; vx < 3; ++vx)
        for (int vz = 0; vz < 3; ++vz) {
            CMatrix d = displacement(vx, vz, conv);
            d *= omega_power(static_cast<double>(uz * vx - ux * vz));
            a += d;
        }
    a *= Complex{1.0 / 3.0, 0.0};
    return a;
}

Complex DwfGrid::sum() const {
    Complex s{0.0, 0.0};
    for (const auto& v : values_) s += v;
    return s;
}

double DwfGrid::max_imag() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v.imag()));
    return m;
}

std::array<int, 4> DwfGrid::label_of(std::size_t index) {
    const int z2 = static_cast<int>(index % 3);
    const int x2 = static_cast<int>(index / 3 % 3);
    const int z1 = static_cast<int>(index / 9 % 3);
    const int x1 = static_cast<int>(index / 27 % 3);
    return {x1, z1, x2, z2};
}

namespace {

// The 81 kernels A_(x1,z1) (x) A_(x2,z2) are fixed per convention; build them
// once and reuse across every evaluation.
const std::vector<CMatrix>& kernels(WignerConvention conv) {
    static const auto build = [](WignerConvention c) {
        std::vector<CMatrix> single;
        single.reserve(9);
        for (int x = 0; x < 3; ++x)
            for (int z = 0; z < 3; ++z) single.push_back(phase_point_operator(x, z, c));
        std::vector<CMatrix> out;
        out.reserve(DwfGrid::kPoints);
        for (std::size_t i = 0; i < DwfGrid::kPoints; ++i) {
            const auto [x1, z1, x2, z2] = DwfGrid::label_of(i);
            out.push_back(kron(single[static_cast<std::size_t>(3 * x1 + z1)],
                               single[static_cast<std::size_t>(3 * x2 + z2)]));
        }
        return out;
    };
    static const std::vector<CMatrix> paper = build(WignerConvention::PaperFractional);
    static const std::vector<CMatrix> gross = build(WignerConvention::GrossInverseTwo);
    return conv == WignerConvention::PaperFractional ? paper : gross;
}

}  // namespace

DwfGrid dwf(const DensityMatrix& rho, WignerConvention conv) {
    const auto& ks = kernels(conv);
    DwfGrid grid;
    for (std::size_t i = 0; i < DwfGrid::kPoints; ++i) {
        const auto [x1, z1, x2, z2] = DwfGrid::label_of(i);
        grid.at(x1, z1, x2, z2) = expectation(ks[i], rho.matrix()) / 9.0;
    }
    return grid;
}

double wigner_negativity(const DensityMatrix& rho, WignerConvention conv) {
    const DwfGrid grid = dwf(rho, conv);
    double abs_sum = 0.0;
    for (const auto& v : grid.values()) abs_sum += std::abs(v.real());
    const double n = 0.5 * (abs_sum - 1.0);
    return n < 1e-12 ? 0.0 : n;
}

double wigner_negativity_checked(const DensityMatrix& rho, WignerConvention conv,
                                 double imag_tol) {
    const DwfGrid grid = dwf(rho, conv);
    for (std::size_t i = 0; i < DwfGrid::kPoints; ++i) {
        const double im = std::abs(grid.values()[i].imag());
        if (im > imag_tol) {
            const auto [x1, z1, x2, z2] = DwfGrid::label_of(i);
            throw std::runtime_error(
                "wigner_negativity: imaginary component " + std::to_string(im) +
                " at phase point (" + std::to_string(x1) + "," + std::to_string(z1) + ";" +
                std::to_string(x2) + "," + std::to_string(z2) +
                ") exceeds tolerance; grid is not real under this convention");
        }
    }
    double abs_sum = 0.0;
    for (const auto& v : grid.values()) abs_sum += std::abs(v.real());
    const double n = 0.5 * (abs_sum - 1.0);
    return n < 1e-12 ? 0.0 : n;
}

std::vector<DwfCluster> dwf_multiset(const DwfGrid& grid) {
    std::vector<double> vals;
    vals.reserve(DwfGrid::kPoints);
    for (const auto& v : grid.values()) vals.push_back(v.real());
    std::sort(vals.begin(), vals.end());

    std::vector<DwfCluster> clusters;
    double acc = 0.0;
    int count = 0;
    auto flush = [&]() {
        if (count == 0) return;
        double mean = acc / count;
        // Prefer the exact small-denominator fraction when one is this close.
        for (int q = 1; q <= 324; ++q) {
            const double snapped = std::round(mean * q) / q;
            if (std::abs(snapped - mean) <= tol::kDwfCluster) {
                mean = snapped;
                break;
            }
        }
        clusters.push_back({mean, count});
        acc = 0.0;
        count = 0;
    };

    double anchor = 0.0;
    for (double v : vals) {
        if (count > 0 && std::abs(v - anchor) > tol::kDwfCluster) flush();
        if (count == 0) anchor = v;
        acc += v;
        ++count;
    }
    flush();
    return clusters;
}

std::string dwf_table_csv(const DwfGrid& grid) {
    std::string out;
    char buf[48];
    for (int r = 0; r < 9; ++r) {
        for (int c = 0; c < 9; ++c) {
            std::snprintf(buf, sizeof(buf), "%.9g", grid.table_at(r, c).real());
            if (c) out += ',';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace tq
