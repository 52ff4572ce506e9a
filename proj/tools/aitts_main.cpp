// Command-line front end: state inspection, metric evaluation, parameter
// sweeps, feasibility regions, optimization, and the published-value
// conformance suite. Emits table, CSV, or JSON output suitable for plotting.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tq/conformance.hpp"
#include "tq/explore.hpp"

using nlohmann::json;

namespace {

struct GlobalOptions {
    std::string format = "table";
    std::string out_path;
    std::string convention = "paper";
    std::vector<double> phases = {0.0, 0.5, 0.25, -0.25};
    int threads = 1;
    bool degrees = false;
};

double to_radians(const GlobalOptions& opts, double angle) {
    return opts.degrees ? angle * std::numbers::pi / 180.0 : angle;
}

tq::WignerConvention convention_of(const GlobalOptions& opts) {
    if (opts.convention == "paper") return tq::WignerConvention::PaperFractional;
    if (opts.convention == "gross") return tq::WignerConvention::GrossInverseTwo;
    throw CLI::ValidationError("--convention must be 'paper' or 'gross'");
}

tq::MeasurementPhases phases_of(const GlobalOptions& opts) {
    if (opts.phases.size() != 4) {
        throw CLI::ValidationError("--phases needs four comma-separated values a1,a2,b1,b2");
    }
    return {opts.phases[0], opts.phases[1], opts.phases[2], opts.phases[3]};
}

std::string fmt9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// Direction selector shared by state/metrics/sweep: either a catalog name or
// explicit --theta/--phi.
struct DirectionArgs {
    std::string name;
    std::optional<double> theta;
    std::optional<double> phi;
    double p = 1.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("name", name, "catalog state name (S1_1..S3_2, noise)");
        cmd->add_option("--theta", theta, "polar angle");
        cmd->add_option("--phi", phi, "azimuthal angle");
        cmd->add_option("--p", p, "mixing weight in [0,1]")->check(CLI::Range(0.0, 1.0));
    }

    // Resolves to (theta, phi) in radians; nullopt for the noise state.
    std::optional<std::pair<double, double>> resolve(const GlobalOptions& opts) const {
        if (!name.empty()) {
            const auto entry = tq::catalog_lookup(name);
            if (!entry) {
                std::string names;
                for (const auto& e : tq::catalog()) {
                    if (!names.empty()) names += ", ";
                    names += e.name;
                }
                throw CLI::ValidationError("unknown state '" + name + "'; valid names: " + names);
            }
            if (!entry->theta) return std::nullopt;
            return std::make_pair(*entry->theta, *entry->phi);
        }
        if (!theta || !phi) {
            throw CLI::ValidationError("give a catalog name or both --theta and --phi");
        }
        const double t = to_radians(opts, *theta);
        const double f = to_radians(opts, *phi);
        if (!tq::AittsParams(t, f, 0.0).angles_in_principal_range()) {
            std::cerr << "warning: angles outside [0,pi] x [0,2pi]; values are still valid "
                         "(trig is total)\n";
        }
        return std::make_pair(t, f);
    }
};

void write_output(const GlobalOptions& opts, const std::string& content) {
    if (opts.out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + opts.out_path);
    out << content;
    if (!out.good()) throw std::runtime_error("write failed for: " + opts.out_path);
}

json meta_for(const GlobalOptions& opts, const std::string& command) {
    json meta;
    meta["command"] = command;
    meta["convention"] = opts.convention;
    meta["phases"] = opts.phases;
    return meta;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

tq::Metric metric_from_flag(const std::string& flag, const GlobalOptions& opts) {
    if (flag == "e" || flag == "entanglement") return tq::Metric::entanglement();
    if (flag == "n" || flag == "wigner") {
        return tq::Metric::wigner_negativity(convention_of(opts));
    }
    if (flag == "i3" || flag == "bell") return tq::Metric::bell_i3(phases_of(opts));
    throw CLI::ValidationError("--metric must be one of e|entanglement, n|wigner, i3|bell");
}

std::string complex_str(const tq::Complex& c) {
    std::string out = fmt9(c.real());
    if (c.imag() != 0.0) out += (c.imag() > 0 ? "+" : "") + fmt9(c.imag()) + "i";
    return out;
}

// ---------------------------------------------------------------------------
// state

void run_state(const GlobalOptions& opts, const DirectionArgs& dir) {
    const auto angles = dir.resolve(opts);
    const tq::DensityMatrix rho =
        angles ? tq::aitts(tq::AittsParams(angles->first, angles->second, dir.p))
               : tq::noise_state();

    std::optional<int> schmidt;
    std::optional<tq::AittsCoefficients> coeff;
    if (angles) {
        schmidt = tq::schmidt_number(tq::psi(angles->first, angles->second));
        coeff = tq::aitts_coefficients(tq::AittsParams(angles->first, angles->second, dir.p));
    }

    if (opts.format == "json") {
        json j;
        j["meta"] = meta_for(opts, "state");
        json data;
        if (angles) {
            data["theta"] = angles->first;
            data["phi"] = angles->second;
            data["p"] = dir.p;
            data["schmidt_number"] = *schmidt;
            data["epsilon"] = coeff->epsilon;
            data["kappa"] = {coeff->kappa1, coeff->kappa2, coeff->kappa3};
            data["tau"] = {coeff->tau1, coeff->tau2, coeff->tau3};
        }
        json rows = json::array();
        for (std::size_t r = 0; r < 9; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < 9; ++c) {
                const auto& v = rho.matrix()(r, c);
                row.push_back(json::array({v.real(), v.imag()}));
            }
            rows.push_back(row);
        }
        data["matrix"] = rows;
        j["data"] = data;
        write_output(opts, dump_json(j));
        return;
    }

    std::ostringstream os;
    if (opts.format == "csv") {
        os << "row,col,re,im\n";
        for (std::size_t r = 0; r < 9; ++r)
            for (std::size_t c = 0; c < 9; ++c) {
                const auto& v = rho.matrix()(r, c);
                os << r << "," << c << "," << fmt9(v.real()) << "," << fmt9(v.imag()) << "\n";
            }
        write_output(opts, os.str());
        return;
    }

    if (angles) {
        os << "theta = " << fmt9(angles->first) << "  phi = " << fmt9(angles->second)
           << "  p = " << fmt9(dir.p) << "\n";
        os << "schmidt number = " << *schmidt << "\n";
        os << "epsilon = " << fmt9(coeff->epsilon) << "\n";
        os << "kappa = (" << fmt9(coeff->kappa1) << ", " << fmt9(coeff->kappa2) << ", "
           << fmt9(coeff->kappa3) << ")\n";
        os << "tau = (" << fmt9(coeff->tau1) << ", " << fmt9(coeff->tau2) << ", "
           << fmt9(coeff->tau3) << ")\n";
    } else {
        os << "white-noise state I/9\n";
    }
    os << "density matrix:\n";
    for (std::size_t r = 0; r < 9; ++r) {
        for (std::size_t c = 0; c < 9; ++c) {
            os << (c ? "  " : "") << complex_str(rho.matrix()(r, c));
        }
        os << "\n";
    }
    write_output(opts, os.str());
}

// ---------------------------------------------------------------------------
// metrics

void run_metrics(const GlobalOptions& opts, const DirectionArgs& dir,
                 const std::string& dwf_out, double imag_tol) {
    const auto angles = dir.resolve(opts);
    const tq::DensityMatrix rho =
        angles ? tq::aitts(tq::AittsParams(angles->first, angles->second, dir.p))
               : tq::noise_state();
    const auto conv = convention_of(opts);

    const double e = tq::negativity(rho);
    const double n = imag_tol > 0.0 ? tq::wigner_negativity_checked(rho, conv, imag_tol)
                                    : tq::wigner_negativity(rho, conv);
    const double i3 = tq::cglmp_i3(rho, phases_of(opts));
    const tq::DwfGrid grid = tq::dwf(rho, conv);
    const double max_im = grid.max_imag();

    if (!dwf_out.empty()) {
        std::ofstream out(dwf_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output path: " + dwf_out);
        out << tq::dwf_table_csv(grid);
    }

    if (opts.format == "json") {
        json j;
        j["meta"] = meta_for(opts, "metrics");
        j["data"] = {{"entanglement", e},
                     {"wigner_negativity", n},
                     {"cglmp_i3", i3},
                     {"max_imag_w", max_im}};
        write_output(opts, dump_json(j));
    } else if (opts.format == "csv") {
        std::ostringstream os;
        os << "metric,value\n";
        os << "entanglement," << fmt9(e) << "\n";
        os << "wigner_negativity," << fmt9(n) << "\n";
        os << "cglmp_i3," << fmt9(i3) << "\n";
        write_output(opts, os.str());
    } else {
        std::ostringstream os;
        os << "entanglement      = " << fmt9(e) << "\n";
        os << "wigner_negativity = " << fmt9(n) << "  (max imaginary grid component "
           << fmt9(max_im) << ")\n";
        os << "cglmp_i3          = " << fmt9(i3) << "\n";
        write_output(opts, os.str());
    }
}

// ---------------------------------------------------------------------------
// sweep

void run_sweep(const GlobalOptions& opts, const DirectionArgs& dir, const std::string& metric_flag,
               std::size_t p_steps) {
    const auto angles = dir.resolve(opts);
    if (!angles) throw CLI::ValidationError("sweep needs a direction, not the noise state");
    const auto metric = metric_from_flag(metric_flag, opts);
    const auto grid = tq::linspace(0.0, 1.0, p_steps);
    const auto curve = tq::sweep_p(angles->first, angles->second, grid, metric);

    if (opts.format == "json") {
        json j;
        j["meta"] = meta_for(opts, "sweep");
        j["meta"]["theta"] = angles->first;
        j["meta"]["phi"] = angles->second;
        j["meta"]["metric"] = metric.name();
        json data = json::array();
        for (const auto& s : curve) data.push_back({{"p", s.p}, {"value", s.value}});
        j["data"] = data;
        write_output(opts, dump_json(j));
        return;
    }
    std::ostringstream os;
    os << "theta,phi,p,metric,value\n";
    for (const auto& s : curve) {
        os << fmt9(angles->first) << "," << fmt9(angles->second) << "," << fmt9(s.p) << ","
           << metric.name() << "," << fmt9(s.value) << "\n";
    }
    write_output(opts, os.str());
}

// ---------------------------------------------------------------------------
// region

void run_region(const GlobalOptions& opts, const std::string& metric_flag, double level,
                std::size_t theta_steps, std::size_t phi_steps, std::size_t p_steps) {
    const auto metric = metric_from_flag(metric_flag, opts);
    const auto region = tq::region_mask(
        metric, level, tq::linspace(0.0, std::numbers::pi, theta_steps),
        tq::linspace(0.0, 2.0 * std::numbers::pi, phi_steps),
        tq::linspace(0.0, 1.0, p_steps), opts.threads);

    if (opts.format == "json") {
        json j;
        j["meta"] = meta_for(opts, "region");
        j["meta"]["metric"] = metric.name();
        j["meta"]["level"] = level;
        j["meta"]["theta_grid"] = region.theta_grid;
        j["meta"]["phi_grid"] = region.phi_grid;
        j["meta"]["p_grid"] = region.p_grid;
        json data = json::array();
        for (std::size_t i = 0; i < region.theta_grid.size(); ++i) {
            json plane = json::array();
            for (std::size_t j2 = 0; j2 < region.phi_grid.size(); ++j2) {
                json line = json::array();
                for (std::size_t k = 0; k < region.p_grid.size(); ++k) {
                    line.push_back(region.at(i, j2, k) ? 1 : 0);
                }
                plane.push_back(line);
            }
            data.push_back(plane);
        }
        j["data"] = data;
        write_output(opts, dump_json(j));
        return;
    }
    std::ostringstream os;
    os << "theta,phi,p,inside\n";
    for (std::size_t i = 0; i < region.theta_grid.size(); ++i)
        for (std::size_t j = 0; j < region.phi_grid.size(); ++j)
            for (std::size_t k = 0; k < region.p_grid.size(); ++k) {
                os << fmt9(region.theta_grid[i]) << "," << fmt9(region.phi_grid[j]) << ","
                   << fmt9(region.p_grid[k]) << "," << (region.at(i, j, k) ? 1 : 0) << "\n";
            }
    write_output(opts, os.str());
}

// ---------------------------------------------------------------------------
// maximize

void run_maximize(const GlobalOptions& opts, const std::string& metric_flag) {
    const auto metric = metric_from_flag(metric_flag, opts);
    const auto result = tq::maximize_metric(metric);

    if (opts.format == "csv") {
        std::ostringstream os;
        os << "theta,phi,p,metric,value\n";
        for (const auto& o : result.optima) {
            os << fmt9(o.theta) << "," << fmt9(o.phi) << ",1," << metric.name() << ","
               << fmt9(o.value) << "\n";
        }
        write_output(opts, os.str());
        return;
    }
    if (opts.format == "json") {
        json j;
        j["meta"] = meta_for(opts, "maximize");
        j["meta"]["metric"] = metric.name();
        json optima = json::array();
        for (const auto& o : result.optima) {
            optima.push_back({{"theta", o.theta}, {"phi", o.phi}, {"value", o.value}});
        }
        j["data"] = {{"best", {{"theta", result.best.theta},
                               {"phi", result.best.phi},
                               {"value", result.best.value}}},
                     {"optima", optima}};
        write_output(opts, dump_json(j));
        return;
    }
    std::ostringstream os;
    os << "best: value " << fmt9(result.best.value) << " at (theta, phi) = ("
       << fmt9(result.best.theta) << ", " << fmt9(result.best.phi) << "), p = 1\n";
    if (result.optima.size() > 1) {
        os << "near-ties:\n";
        for (std::size_t i = 1; i < result.optima.size(); ++i) {
            const auto& o = result.optima[i];
            os << "  value " << fmt9(o.value) << " at (" << fmt9(o.theta) << ", " << fmt9(o.phi)
               << ")\n";
        }
    }
    write_output(opts, os.str());
}

// ---------------------------------------------------------------------------
// contour

void run_contour(const GlobalOptions& opts, const std::string& metric_flag,
                 std::size_t theta_steps, std::size_t phi_steps) {
    const auto metric = metric_from_flag(metric_flag, opts);
    const auto grid =
        tq::contour_grid(metric, tq::linspace(0.0, std::numbers::pi, theta_steps),
                            tq::linspace(0.0, 2.0 * std::numbers::pi, phi_steps));
    const bool with_iso = !grid.iso2.empty();

    if (opts.format == "json") {
        json j;
        j["meta"] = meta_for(opts, "contour");
        j["meta"]["metric"] = metric.name();
        j["meta"]["theta_grid"] = grid.theta_grid;
        j["meta"]["phi_grid"] = grid.phi_grid;
        json values = json::array();
        for (std::size_t i = 0; i < grid.theta_grid.size(); ++i) {
            json row = json::array();
            for (std::size_t j2 = 0; j2 < grid.phi_grid.size(); ++j2) {
                row.push_back(grid.values[i * grid.phi_grid.size() + j2]);
            }
            values.push_back(row);
        }
        j["data"]["values"] = values;
        if (with_iso) {
            json iso = json::array();
            for (std::size_t i = 0; i < grid.theta_grid.size(); ++i) {
                json row = json::array();
                for (std::size_t j2 = 0; j2 < grid.phi_grid.size(); ++j2) {
                    row.push_back(grid.iso2[i * grid.phi_grid.size() + j2] ? 1 : 0);
                }
                iso.push_back(row);
            }
            j["data"]["iso2"] = iso;
        }
        write_output(opts, dump_json(j));
        return;
    }
    std::ostringstream os;
    os << "theta,phi,p,metric,value" << (with_iso ? ",iso2\n" : "\n");
    for (std::size_t i = 0; i < grid.theta_grid.size(); ++i)
        for (std::size_t j = 0; j < grid.phi_grid.size(); ++j) {
            os << fmt9(grid.theta_grid[i]) << "," << fmt9(grid.phi_grid[j]) << ",1,"
               << metric.name() << "," << fmt9(grid.values[i * grid.phi_grid.size() + j]);
            if (with_iso) os << "," << (grid.iso2[i * grid.phi_grid.size() + j] ? 1 : 0);
            os << "\n";
        }
    write_output(opts, os.str());
}

// ---------------------------------------------------------------------------
// verify-paper

void run_verify(const GlobalOptions& opts, int& exit_code) {
    const auto report = tq::run_conformance(convention_of(opts));
    exit_code = report.all_passed() ? 0 : 1;

    if (opts.format == "json") {
        json j;
        j["meta"] = meta_for(opts, "verify-paper");
        j["meta"]["pass"] = report.count(tq::CheckStatus::Pass);
        j["meta"]["fail"] = report.count(tq::CheckStatus::Fail);
        j["meta"]["paper_inconsistent"] = report.count(tq::CheckStatus::PaperInconsistent);
        json data = json::array();
        for (const auto& c : report.checks) {
            data.push_back({{"id", c.id},
                            {"description", c.description},
                            {"expected", c.expected},
                            {"computed", c.computed},
                            {"tolerance", c.tolerance},
                            {"status", tq::to_string(c.status)}});
        }
        j["data"] = data;
        write_output(opts, dump_json(j));
        return;
    }
    if (opts.format == "csv") {
        std::ostringstream os;
        os << "id,status,expected,computed,tolerance\n";
        for (const auto& c : report.checks) {
            os << c.id << "," << tq::to_string(c.status) << ",\"" << c.expected << "\",\""
               << c.computed << "\"," << fmt9(c.tolerance) << "\n";
        }
        write_output(opts, os.str());
        return;
    }
    std::ostringstream os;
    for (const auto& c : report.checks) {
        const char* tag = c.status == tq::CheckStatus::Pass ? "[PASS]"
                          : c.status == tq::CheckStatus::Fail ? "[FAIL]"
                                                                 : "[PAPER-INCONSISTENT]";
        os << tag << " " << c.id << ": expected " << c.expected << ", computed " << c.computed
           << "\n";
    }
    os << report.count(tq::CheckStatus::Pass) << " passed, "
       << report.count(tq::CheckStatus::Fail) << " failed, "
       << report.count(tq::CheckStatus::PaperInconsistent)
       << " known published inconsistencies\n";
    write_output(opts, os.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anisotropic two-qutrit state explorer"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--out", opts.out_path, "write output to this path instead of stdout");
    app.add_option("--convention", opts.convention, "Wigner phase convention")
        ->check(CLI::IsMember({"paper", "gross"}))
        ->capture_default_str();
    app.add_option("--phases", opts.phases, "measurement phases a1,a2,b1,b2")
        ->delimiter(',')
        ->expected(4);
    app.add_option("--threads", opts.threads, "worker threads for grid scans")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--deg", opts.degrees, "interpret --theta/--phi in degrees");

    DirectionArgs state_dir;
    auto* state_cmd = app.add_subcommand("state", "show a density matrix and its parameters");
    state_dir.attach(state_cmd);

    DirectionArgs metrics_dir;
    std::string metrics_dwf_out;
    auto* metrics_cmd =
        app.add_subcommand("metrics", "evaluate entanglement, Wigner negativity, and I3");
    metrics_dir.attach(metrics_cmd);
    metrics_cmd->add_option("--dwf-out", metrics_dwf_out,
                            "also write the 9x9 phase-space table CSV to this path");
    double metrics_imag_tol = 0.0;
    metrics_cmd->add_option("--imag-tol", metrics_imag_tol,
                            "reject grids whose imaginary component exceeds this bound");

    DirectionArgs sweep_dir;
    std::string sweep_metric = "e";
    std::size_t sweep_steps = 101;
    auto* sweep_cmd = app.add_subcommand("sweep", "metric along p for a fixed direction");
    sweep_dir.attach(sweep_cmd);
    sweep_cmd->add_option("--metric", sweep_metric, "e|n|i3");
    sweep_cmd->add_option("--p-steps", sweep_steps, "number of p samples")
        ->check(CLI::PositiveNumber);

    std::string region_metric = "i3";
    double region_level = 2.0;
    std::size_t region_theta = 181, region_phi = 361, region_p = 101;
    auto* region_cmd = app.add_subcommand("region", "3D feasibility mask metric > level");
    region_cmd->add_option("--metric", region_metric, "e|n|i3");
    region_cmd->add_option("--level", region_level, "threshold level");
    region_cmd->add_option("--theta-steps", region_theta, "")->check(CLI::PositiveNumber);
    region_cmd->add_option("--phi-steps", region_phi, "")->check(CLI::PositiveNumber);
    region_cmd->add_option("--p-steps", region_p, "")->check(CLI::PositiveNumber);

    std::string maximize_metric_flag = "i3";
    auto* maximize_cmd = app.add_subcommand("maximize", "maximize a metric over (theta, phi)");
    maximize_cmd->add_option("--metric", maximize_metric_flag, "e|n|i3");

    std::string contour_metric = "e";
    std::size_t contour_theta = 181, contour_phi = 361;
    auto* contour_cmd = app.add_subcommand("contour", "metric table over (theta, phi) at p=1");
    contour_cmd->add_option("--metric", contour_metric, "e|n|i3");
    contour_cmd->add_option("--theta-steps", contour_theta, "")->check(CLI::PositiveNumber);
    contour_cmd->add_option("--phi-steps", contour_phi, "")->check(CLI::PositiveNumber);

    auto* verify_cmd =
        app.add_subcommand("verify-paper", "replay the published reference values and report "
                                           "pass/fail/known-inconsistency per check");

    // Global flags (--format, --out, ...) remain usable after a subcommand name.
    for (auto* sub : {state_cmd, metrics_cmd, sweep_cmd, region_cmd, maximize_cmd, contour_cmd,
                      verify_cmd}) {
        sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        int exit_code = 0;
        if (state_cmd->parsed()) run_state(opts, state_dir);
        if (metrics_cmd->parsed())
            run_metrics(opts, metrics_dir, metrics_dwf_out, metrics_imag_tol);
        if (sweep_cmd->parsed()) run_sweep(opts, sweep_dir, sweep_metric, sweep_steps);
        if (region_cmd->parsed())
            run_region(opts, region_metric, region_level, region_theta, region_phi, region_p);
        if (maximize_cmd->parsed()) run_maximize(opts, maximize_metric_flag);
        if (contour_cmd->parsed()) run_contour(opts, contour_metric, contour_theta, contour_phi);
        if (verify_cmd->parsed()) run_verify(opts, exit_code);
        return exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
