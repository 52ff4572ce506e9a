#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tq/bell.hpp"
#include "tq/entanglement.hpp"
#include "tq/wigner.hpp"

namespace tq {

/// Which scalar property to evaluate over (theta, phi, p). BellI3 carries
/// its measurement phases, WignerNegativity its convention.
struct Metric {
    enum class Kind { Entanglement, WignerNegativity, BellI3 };

    Kind kind = Kind::Entanglement;
    WignerConvention convention = WignerConvention::PaperFractional;
    MeasurementPhases phases = MeasurementPhases::defaults();

    static Metric entanglement();
    static Metric wigner_negativity(WignerConvention conv);
    static Metric bell_i3(MeasurementPhases phases);

    /// Stable identifier used in file output: "entanglement",
    /// "wigner_negativity", or "cglmp_i3".
    std::string name() const;
};

/// Evaluates one metric repeatedly; Bell kernels are built once up front.
class MetricEvaluator {
public:
    explicit MetricEvaluator(const Metric& metric);

    double operator()(const DensityMatrix& rho) const;
    double at(double theta, double phi, double p) const;

private:
    Metric metric_;
    std::optional<BellEvaluator> bell_;
};

struct CurveSample {
    double p;
    double value;
};

/// Evaluate the metric along p for a fixed direction; output order matches
/// p_grid.
std::vector<CurveSample> sweep_p(double theta, double phi, std::span<const double> p_grid,
                                 const Metric& metric);

/// Smallest p in [0,1] with metric > level, by bisection to |dp| < 1e-7.
/// Assumes metric(p) - level changes sign at most once (true for this family).
std::optional<double> find_threshold(double theta, double phi, const Metric& metric,
                                     double level);

/// Kink locations of a uniformly sampled piecewise-linear curve. Detection:
/// |second difference| above 10x its median magnitude; consecutive detections
/// merge, and each kink is refined by bisecting the gap between the fitted
/// left and right lines down to 1e-5. Needs at least 5 samples.
std::vector<double> detect_breakpoints(std::span<const CurveSample> samples);

/// 3D predicate mask over a (theta, phi, p) grid. Layout: index
/// (i * n_phi + j) * n_p + k. Cells are independent, so the mask is
/// bit-identical for any thread count.
struct RegionMask {
    std::vector<double> theta_grid, phi_grid, p_grid;
    std::vector<std::uint8_t> mask;

    bool at(std::size_t i, std::size_t j, std::size_t k) const {
        return mask[(i * phi_grid.size() + j) * p_grid.size() + k] != 0;
    }
    std::size_t count_true() const;
};

RegionMask region_mask(const Metric& metric, double level, std::vector<double> theta_grid,
                       std::vector<double> phi_grid, std::vector<double> p_grid,
                       int threads = 1);

struct Optimum {
    double theta;
    double phi;
    double value;
};

/// Best refined optimum first; `optima` lists every refined grid-local
/// maximum within 1e-4 of the best (the best included), deduplicated,
/// ordered by value (ties broken by coordinates).
struct MaximizeResult {
    Optimum best;
    std::vector<Optimum> optima;
};

/// Coarse grid scan at p=1 (default 181 x 361 over [0,pi] x [0,2pi])
/// followed by simplex (reflect/expand/contract) refinement of each
/// candidate cell until the simplex diameter drops below 1e-7.
MaximizeResult maximize_metric(const Metric& metric, std::size_t theta_steps = 181,
                               std::size_t phi_steps = 361);

MaximizeResult maximize_i3(const MeasurementPhases& phases);

/// Metric table at p=1 for contour plotting. For BellI3 the `iso2` flags mark
/// cells where the value-2 level line passes between the cell and its right
/// or downward neighbor.
struct ContourGrid {
    std::vector<double> theta_grid, phi_grid;
    std::vector<double> values;       // index i * n_phi + j
    std::vector<std::uint8_t> iso2;   // same layout; empty unless metric is BellI3
};

ContourGrid contour_grid(const Metric& metric, std::vector<double> theta_grid,
                         std::vector<double> phi_grid);

/// n evenly spaced points from a to b inclusive (n >= 2), or {a} for n == 1.
std::vector<double> linspace(double a, double b, std::size_t n);

}  // namespace tq
