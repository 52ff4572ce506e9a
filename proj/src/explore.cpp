#include "tq/explore.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace tq {

Metric Metric::entanglement() {
    Metric m;
    m.kind = Kind::Entanglement;
    return m;
}

Metric Metric::wigner_negativity(WignerConvention conv) {
    Metric m;
    m.kind = Kind::WignerNegativity;
    m.convention = conv;
    return m;
}

Metric Metric::bell_i3(MeasurementPhases phases) {
    Metric m;
    m.kind = Kind::BellI3;
    m.phases = phases;
    return m;
}

std::string Metric::name() const {
    switch (kind) {
        case Kind::Entanglement: return "entanglement";
        case Kind::WignerNegativity: return "wigner_negativity";
        case Kind::BellI3: return "cglmp_i3";
    }
    return "unknown";
}

MetricEvaluator::MetricEvaluator(const Metric& metric) : metric_(metric) {
    if (metric_.kind == Metric::Kind::BellI3) bell_.emplace(metric_.phases);
}

double MetricEvaluator::operator()(const DensityMatrix& rho) const {
    switch (metric_.kind) {
        case Metric::Kind::Entanglement: return negativity(rho);
        case Metric::Kind::WignerNegativity: return wigner_negativity(rho, metric_.convention);
        case Metric::Kind::BellI3: return bell_->i3(rho);
    }
    return 0.0;
}

double MetricEvaluator::at(double theta, double phi, double p) const {
    return (*this)(aitts(AittsParams(theta, phi, p)));
}

std::vector<CurveSample> sweep_p(double theta, double phi, std::span<const double> p_grid,
                                 const Metric& metric) {
    const MetricEvaluator eval(metric);
    std::vector<CurveSample> out;
    out.reserve(p_grid.size());
    for (double p : p_grid) out.push_back({p, eval.at(theta, phi, p)});
    return out;
}

std::optional<double> find_threshold(double theta, double phi, const Metric& metric,
                                     double level) {
    const MetricEvaluator eval(metric);
    const auto above = [&](double p) { return eval.at(theta, phi, p) > level; };
    if (!above(1.0)) return std::nullopt;
    if (above(0.0)) return 0.0;
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-7) {
        const double mid = 0.5 * (lo + hi);
        if (above(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

// Line through two samples, evaluated at p.
double through(const CurveSample& a, const CurveSample& b, double p) {
    const double slope = (b.value - a.value) / (b.p - a.p);
    return a.value + slope * (p - a.p);
}

}  // namespace

std::vector<double> detect_breakpoints(std::span<const CurveSample> samples) {
    const std::size_t n = samples.size();
    if (n < 5) throw std::invalid_argument("detect_breakpoints: need at least 5 samples");
    const double h = samples[1].p - samples[0].p;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs((samples[i].p - samples[i - 1].p) - h) > 1e-9) {
            throw std::invalid_argument("detect_breakpoints: samples must be uniformly spaced");
        }
    }

    std::vector<double> d2(n - 2);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        d2[i - 1] = std::abs(samples[i + 1].value - 2.0 * samples[i].value +
                             samples[i - 1].value);
    }
    std::vector<double> sorted = d2;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];

    // The 1e-12 floor keeps double-rounding dust on exactly-linear segments
    // from being flagged when the median itself is zero.
    const double threshold = std::max(10.0 * median, 1e-12);
    std::vector<std::size_t> flagged;  // index into samples
    for (std::size_t i = 0; i < d2.size(); ++i) {
        if (d2[i] > threshold) flagged.push_back(i + 1);
    }
    if (flagged.empty()) return {};

    std::vector<double> breakpoints;
    std::size_t run_begin = 0;
    while (run_begin < flagged.size()) {
        std::size_t run_end = run_begin;
        while (run_end + 1 < flagged.size() && flagged[run_end + 1] == flagged[run_end] + 1) {
            ++run_end;
        }
        const std::size_t i0 = flagged[run_begin];
        const std::size_t i1 = flagged[run_end];

        double found = 0.5 * (samples[i0].p + samples[i1].p);
        if (i0 >= 3 && i1 + 3 < n) {
            // Extend the clean segments on both sides and bisect their gap.
            const CurveSample la = samples[i0 - 3];
            const CurveSample lb = samples[i0 - 2];
            const CurveSample ra = samples[i1 + 2];
            const CurveSample rb = samples[i1 + 3];
            const auto gap = [&](double p) { return through(la, lb, p) - through(ra, rb, p); };
            double lo = samples[i0 - 1].p;
            double hi = samples[i1 + 1].p;
            if (gap(lo) == 0.0) {
                found = lo;
            } else if (gap(hi) == 0.0) {
                found = hi;
            } else if (gap(lo) * gap(hi) < 0.0) {
                while (hi - lo > 1e-5) {
                    const double mid = 0.5 * (lo + hi);
                    if (gap(lo) * gap(mid) <= 0.0) {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                found = 0.5 * (lo + hi);
            }
        }
        breakpoints.push_back(found);
        run_begin = run_end + 1;
    }
    return breakpoints;
}

std::size_t RegionMask::count_true() const {
    std::size_t c = 0;
    for (auto b : mask) c += b != 0;
    return c;
}

RegionMask region_mask(const Metric& metric, double level, std::vector<double> theta_grid,
                       std::vector<double> phi_grid, std::vector<double> p_grid, int threads) {
    if (theta_grid.empty() || phi_grid.empty() || p_grid.empty()) {
        throw std::invalid_argument("region_mask: grids must be non-empty");
    }
    if (threads < 1) threads = 1;

    RegionMask region;
    region.theta_grid = std::move(theta_grid);
    region.phi_grid = std::move(phi_grid);
    region.p_grid = std::move(p_grid);
    const std::size_t nt = region.theta_grid.size();
    const std::size_t nf = region.phi_grid.size();
    const std::size_t np = region.p_grid.size();
    region.mask.assign(nt * nf * np, 0);

    const MetricEvaluator eval(metric);
    const auto fill_rows = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = 0; j < nf; ++j) {
                for (std::size_t k = 0; k < np; ++k) {
                    const double v =
                        eval.at(region.theta_grid[i], region.phi_grid[j], region.p_grid[k]);
                    region.mask[(i * nf + j) * np + k] = v > level ? 1 : 0;
                }
            }
        }
    };

    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), nt);
    if (workers <= 1) {
        fill_rows(0, nt);
        return region;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (nt + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(nt, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(fill_rows, begin, end);
    }
    for (auto& t : pool) t.join();
    return region;
}

namespace {

struct SimplexPoint {
    double theta;
    double phi;
    double value;
};

// Nelder-Mead on -metric, fixed coefficients, deterministic.
Optimum refine_simplex(const MetricEvaluator& eval, double theta0, double phi0, double step) {
    const auto value = [&](double t, double f) { return eval.at(t, f, 1.0); };
    std::array<SimplexPoint, 3> s{{{theta0, phi0, value(theta0, phi0)},
                                   {theta0 + step, phi0, value(theta0 + step, phi0)},
                                   {theta0, phi0 + step, value(theta0, phi0 + step)}}};
    const auto by_value_desc = [](const SimplexPoint& a, const SimplexPoint& b) {
        return a.value > b.value;
    };
    for (int iter = 0; iter < 500; ++iter) {
        std::sort(s.begin(), s.end(), by_value_desc);  // s[0] best, s[2] worst
        const double diameter =
            std::max({std::abs(s[0].theta - s[1].theta), std::abs(s[0].theta - s[2].theta),
                      std::abs(s[1].theta - s[2].theta), std::abs(s[0].phi - s[1].phi),
                      std::abs(s[0].phi - s[2].phi), std::abs(s[1].phi - s[2].phi)});
        if (diameter < 1e-7) break;

        const double ct = 0.5 * (s[0].theta + s[1].theta);  // centroid of the two best
        const double cf = 0.5 * (s[0].phi + s[1].phi);
        const double rt = ct + (ct - s[2].theta);  // reflection
        const double rf = cf + (cf - s[2].phi);
        const double rv = value(rt, rf);
        if (rv > s[0].value) {
            const double et = ct + 2.0 * (ct - s[2].theta);  // expansion
            const double ef = cf + 2.0 * (cf - s[2].phi);
            const double ev = value(et, ef);
            s[2] = ev > rv ? SimplexPoint{et, ef, ev} : SimplexPoint{rt, rf, rv};
        } else if (rv > s[1].value) {
            s[2] = {rt, rf, rv};
        } else {
            const double kt = ct + 0.5 * (s[2].theta - ct);  // contraction
            const double kf = cf + 0.5 * (s[2].phi - cf);
            const double kv = value(kt, kf);
            if (kv > s[2].value) {
                s[2] = {kt, kf, kv};
            } else {  // shrink toward the best vertex
                for (int i = 1; i < 3; ++i) {
                    s[i].theta = s[0].theta + 0.5 * (s[i].theta - s[0].theta);
                    s[i].phi = s[0].phi + 0.5 * (s[i].phi - s[0].phi);
                    s[i].value = value(s[i].theta, s[i].phi);
                }
            }
        }
    }
    std::sort(s.begin(), s.end(), by_value_desc);
    return {s[0].theta, s[0].phi, s[0].value};
}

}  // namespace

MaximizeResult maximize_metric(const Metric& metric, std::size_t theta_steps,
                               std::size_t phi_steps) {
    const MetricEvaluator eval(metric);
    const std::vector<double> thetas = linspace(0.0, std::numbers::pi, theta_steps);
    const std::vector<double> phis = linspace(0.0, 2.0 * std::numbers::pi, phi_steps);

    std::vector<double> grid(thetas.size() * phis.size());
    double grid_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        for (std::size_t j = 0; j < phis.size(); ++j) {
            const double v = eval.at(thetas[i], phis[j], 1.0);
            grid[i * phis.size() + j] = v;
            grid_max = std::max(grid_max, v);
        }
    }

    // Grid-local maxima near the global grid maximum are refinement seeds.
    // The coarse margin only has to be generous enough that refinement can
    // promote a slightly-low cell; 1e-2 covers the grid discretization error.
    const double seed_margin = 1e-2;
    std::vector<Optimum> refined;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        for (std::size_t j = 0; j < phis.size(); ++j) {
            const double v = grid[i * phis.size() + j];
            if (v < grid_max - seed_margin) continue;
            bool local_max = true;
            for (int di = -1; di <= 1 && local_max; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    const std::ptrdiff_t ni = static_cast<std::ptrdiff_t>(i) + di;
                    const std::ptrdiff_t nj = static_cast<std::ptrdiff_t>(j) + dj;
                    if (ni < 0 || nj < 0 || ni >= static_cast<std::ptrdiff_t>(thetas.size()) ||
                        nj >= static_cast<std::ptrdiff_t>(phis.size())) {
                        continue;
                    }
                    if (grid[static_cast<std::size_t>(ni) * phis.size() +
                             static_cast<std::size_t>(nj)] > v) {
                        local_max = false;
                        break;
                    }
                }
            }
            if (!local_max) continue;
            const double step = std::max(thetas.size() > 1 ? thetas[1] - thetas[0] : 0.02,
                                         phis.size() > 1 ? phis[1] - phis[0] : 0.02);
            refined.push_back(refine_simplex(eval, thetas[i], phis[j], step));
        }
    }

    // Order by value (1e-9 slack so symmetric optima compare equal), then by
    // coordinates; deduplicate refinements that landed on the same point.
    std::sort(refined.begin(), refined.end(), [](const Optimum& a, const Optimum& b) {
        if (std::abs(a.value - b.value) > 1e-9) return a.value > b.value;
        if (a.theta != b.theta) return a.theta < b.theta;
        return a.phi < b.phi;
    });
    std::vector<Optimum> unique;
    for (const auto& o : refined) {
        const bool dup = std::any_of(unique.begin(), unique.end(), [&](const Optimum& u) {
            return std::abs(u.theta - o.theta) + std::abs(u.phi - o.phi) < 1e-5;
        });
        if (!dup) unique.push_back(o);
    }

    MaximizeResult result;
    result.best = unique.front();
    for (const auto& o : unique) {
        if (o.value >= result.best.value - 1e-4) result.optima.push_back(o);
    }
    return result;
}

MaximizeResult maximize_i3(const MeasurementPhases& phases) {
    return maximize_metric(Metric::bell_i3(phases));
}

ContourGrid contour_grid(const Metric& metric, std::vector<double> theta_grid,
                         std::vector<double> phi_grid) {
    if (theta_grid.empty() || phi_grid.empty()) {
        throw std::invalid_argument("contour_grid: grids must be non-empty");
    }
    ContourGrid out;
    out.theta_grid = std::move(theta_grid);
    out.phi_grid = std::move(phi_grid);
    const std::size_t nt = out.theta_grid.size();
    const std::size_t nf = out.phi_grid.size();
    out.values.resize(nt * nf);

    const MetricEvaluator eval(metric);
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < nf; ++j)
            out.values[i * nf + j] = eval.at(out.theta_grid[i], out.phi_grid[j], 1.0);

    if (metric.kind == Metric::Kind::BellI3) {
        out.iso2.assign(nt * nf, 0);
        const auto above = [&](std::size_t i, std::size_t j) {
            return out.values[i * nf + j] >= 2.0;
        };
        for (std::size_t i = 0; i < nt; ++i) {
            for (std::size_t j = 0; j < nf; ++j) {
                bool crossing = false;
                if (j + 1 < nf && above(i, j) != above(i, j + 1)) crossing = true;
                if (i + 1 < nt && above(i, j) != above(i + 1, j)) crossing = true;
                out.iso2[i * nf + j] = crossing ? 1 : 0;
            }
        }
    }
    return out;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    if (n == 0) throw std::invalid_argument("linspace: need at least one point");
    if (n == 1) return {a};
    std::vector<double> out(n);
    const double step = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) out[i] = a + step * static_cast<double>(i);
    out.back() = b;
    return out;
}

}  // namespace tq
