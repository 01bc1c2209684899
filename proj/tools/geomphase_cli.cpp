// geomphase command-line front end.
//
// Subcommands:
//   compute        single-point phase evaluation
//   sweep          1- or 2-axis parameter sweep to CSV / JSON-lines
//   figure         bundled sweep presets (fig1a .. fig6b)
//   scan-singular  report grid points where the phase is undefined
//   verify         closed-form vs engine cross-check report
//
// Exit codes: 0 success, 2 usage or domain error, 3 I/O error,
// 4 verification failure.

#include "geomphase/geomphase.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerifyFailed = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void warn_if_reduced(double theta)
{
    if (gp::theta_needs_reduction(theta))
        std::cerr << "warning: theta " << gp::fmt_g12(theta) << " reduced mod pi to "
                  << gp::fmt_g12(gp::reduce_theta(theta)) << "\n";
}

/// Writes through `sink` to --out or stdout.
void with_output(const std::string& out_path, const std::function<void(std::ostream&)>& sink)
{
    if (out_path.empty()) {
        sink(std::cout);
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os)
        throw IoError("cannot open output file '" + out_path + "'");
    sink(os);
    if (!os)
        throw IoError("error while writing '" + out_path + "'");
}

/// "value" or "min:max:steps" -> explicit grid.
std::vector<double> parse_value_grid(const std::string& text, const char* name)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string::npos)
            break;
        start = colon + 1;
    }
    try {
        if (parts.size() == 1)
            return {std::stod(parts[0])};
        if (parts.size() == 3) {
            const double lo = std::stod(parts[0]), hi = std::stod(parts[1]);
            const int steps = std::stoi(parts[2]);
            if (steps < 2 || !(lo < hi))
                throw std::invalid_argument("bad range");
            std::vector<double> grid;
            for (int i = 0; i < steps; ++i)
                grid.push_back(lo + (hi - lo) * static_cast<double>(i) / (steps - 1));
            return grid;
        }
    } catch (const std::exception&) {
        // fall through to the diagnostic below
    }
    throw std::invalid_argument(std::string("--") + name +
                                ": expected 'value' or 'min:max:steps', got '" + text + "'");
}

int run_compute(const std::string& family_str, double theta, double r, double n, double J,
                double omega1t, double omega1, double sing_tol)
{
    const auto family = gp::parse_family(family_str);
    if (!family)
        throw std::invalid_argument("--family must be 'phi' or 'psi'");
    warn_if_reduced(theta);
    const gp::SweepRecord rec =
        gp::evaluate_point(*family, theta, r, n, J, omega1t, omega1, sing_tol);

    std::cout << "family          : " << gp::family_name(rec.family) << "\n"
              << "theta           : " << gp::fmt_g12(rec.theta) << "\n"
              << "r               : " << gp::fmt_g12(rec.r) << "\n"
              << "omega1          : " << gp::fmt_g12(rec.omega1) << "\n"
              << "omega2          : " << gp::fmt_g12(rec.omega2) << "\n"
              << "g               : " << gp::fmt_g12(rec.g) << "\n"
              << "t               : " << gp::fmt_g12(rec.t) << "\n"
              << "phase           : "
              << (rec.gp.singular ? std::string("undefined (singular)")
                                  : gp::fmt_g12(*rec.gp.phase))
              << "\n"
              << "trace_magnitude : " << gp::fmt_g12(rec.gp.trace_magnitude) << "\n"
              << "singular        : " << (rec.gp.singular ? "true" : "false") << "\n"
              << "negativity      : " << gp::fmt_g12(rec.negativity) << "\n";
    return kExitOk;
}

int run_sweep_cmd(const gp::SweepConfig& config, const std::string& out_path)
{
    warn_if_reduced(config.is_swept(gp::SweepParam::Theta) ? 0.0 : config.theta);
    for (const gp::AxisSpec& axis : config.axes)
        if (axis.param == gp::SweepParam::Theta)
            for (double v : axis.values())
                if (gp::theta_needs_reduction(v)) {
                    warn_if_reduced(v);
                    break;
                }
    const std::vector<gp::SweepRecord> records = gp::run_sweep(config);
    with_output(out_path, [&](std::ostream& os) { gp::write_records(os, config, records); });
    return kExitOk;
}

int run_figure(const std::string& id, const std::string& out_path,
               std::optional<gp::OutputFormat> format)
{
    const gp::FigurePreset* preset = gp::find_figure(id);
    if (!preset)
        throw std::invalid_argument("unknown figure id '" + id +
                                    "'; valid ids: " + gp::figure_id_list());
    gp::SweepConfig config = preset->config;
    if (format)
        config.format = *format;
    return run_sweep_cmd(config, out_path);
}

int run_scan(const std::string& family_str, const std::string& theta_spec,
             const std::string& r_spec, const std::string& omega1t_spec, double n, double J,
             double omega1, double sing_tol, const std::string& out_path)
{
    const auto family = gp::parse_family(family_str);
    if (!family)
        throw std::invalid_argument("--family must be 'phi' or 'psi'");
    const std::vector<double> thetas = parse_value_grid(theta_spec, "theta");
    const std::vector<double> rs = parse_value_grid(r_spec, "r");
    const std::vector<double> omega1ts = parse_value_grid(omega1t_spec, "omega1t");

    std::vector<gp::InitialStateSpec> states;
    for (double theta : thetas)
        for (double r : rs)
            states.push_back({*family, theta, r});
    const gp::SystemParams params{omega1, n * omega1, J * omega1};
    std::vector<double> times;
    for (double w1t : omega1ts)
        times.push_back(w1t / omega1);

    const auto hits = gp::scan_singularities(states, params, times, sing_tol);
    with_output(out_path, [&](std::ostream& os) {
        os << "# scan-singular: " << hits.size() << " singular points of "
           << states.size() * times.size() << " grid points, sing_tol=" << gp::fmt_g12(sing_tol)
           << ", sorted by trace_magnitude ascending\n";
        os << gp::kCsvHeader << '\n';
        for (const gp::SingularPoint& hit : hits) {
            const gp::SweepRecord rec =
                gp::evaluate_point(hit.state.family, hit.state.theta, hit.state.r, n, J,
                                   hit.t * omega1, omega1, sing_tol);
            os << gp::csv_row(rec) << '\n';
        }
    });
    return kExitOk;
}

int run_verify(int points, double sing_tol)
{
    const gp::VerifyGrid grid = gp::default_verify_grid(points);
    const gp::VerifyReport report = gp::verify_closed_vs_numeric(grid, sing_tol);
    std::cout << "compared points   : " << report.compared << "\n"
              << "singular skipped  : " << report.singular_skipped << "\n"
              << "max deviation     : " << gp::fmt_g12(report.max_deviation)
              << " rad (circle distance)\n";
    if (report.compared > 0) {
        std::cout << "at                : family=" << gp::family_name(report.argmax.family)
                  << " theta=" << gp::fmt_g12(report.argmax.theta)
                  << " r=" << gp::fmt_g12(report.argmax.r)
                  << " n=" << gp::fmt_g12(report.argmax.n)
                  << " J=" << gp::fmt_g12(report.argmax.J)
                  << " omega1t=" << gp::fmt_g12(report.argmax.omega1t) << "\n"
                  << "min |Tr| compared : " << gp::fmt_g12(report.min_trace_magnitude) << "\n";
    }
    const bool pass = report.compared > 0 && report.max_deviation < 1e-9;
    if (report.compared == 0)
        std::cout << "FAIL (no non-singular points on the grid)\n";
    else if (pass)
        std::cout << "PASS (max deviation < 1e-9)\n";
    else
        std::cout << "FAIL (max deviation >= 1e-9)\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"geometric phases of degenerate mixed two-qubit states under the "
                 "transverse-field XX model"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "evaluate the phase at one parameter point");
    std::string family = "psi";
    double theta = 0.0, r = 1.0, n = 1.0, J = 0.0, omega1t = 0.0, omega1 = 1.0;
    double sing_tol = gp::kSingTol;
    compute->add_option("--family", family, "state family: phi or psi")->required();
    compute->add_option("--theta", theta, "entanglement angle (radians)")->required();
    compute->add_option("--r", r, "mixing weight in (0, 1]")->required();
    compute->add_option("--n", n, "field inhomogeneity omega2/omega1");
    compute->add_option("--J", J, "rescaled coupling g/omega1");
    compute->add_option("--omega1t", omega1t, "dimensionless evolution time omega1*t")
        ->required();
    compute->add_option("--omega1", omega1, "reference frequency (default 1)");
    compute->add_option("--sing-tol", sing_tol, "singularity threshold on |Tr|");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
    std::string config_path, axis1_spec, axis2_spec, format_str, out_path;
    sweep->add_option("--config", config_path, "key-value config file");
    sweep->add_option("--family", family, "state family: phi or psi");
    sweep->add_option("--theta", theta, "fixed theta");
    sweep->add_option("--r", r, "fixed r");
    sweep->add_option("--n", n, "fixed n");
    sweep->add_option("--J", J, "fixed J");
    sweep->add_option("--omega1t", omega1t, "fixed omega1*t");
    sweep->add_option("--omega1", omega1, "reference frequency");
    sweep->add_option("--sing-tol", sing_tol, "singularity threshold");
    sweep->add_option("--axis1", axis1_spec, "swept axis, 'param:min:max:steps' or 'param:v1,v2,...'");
    sweep->add_option("--axis2", axis2_spec, "second swept axis");
    sweep->add_option("--format", format_str, "csv or jsonl");
    sweep->add_option("--out", out_path, "output path (default stdout)");

    // figure
    auto* figure = app.add_subcommand("figure", "emit a bundled figure preset");
    std::string figure_id;
    figure->add_option("id", figure_id, "preset id (fig1a .. fig6b)")->required();
    figure->add_option("--format", format_str, "csv or jsonl");
    figure->add_option("--out", out_path, "output path (default stdout)");

    // scan-singular
    auto* scan = app.add_subcommand("scan-singular", "find undefined-phase grid points");
    std::string theta_spec = "0:3.141592653589793:61", r_spec = "0.01:1:50",
                omega1t_spec = "0.1:6.283185307179586:60";
    scan->add_option("--family", family, "state family: phi or psi")->required();
    scan->add_option("--theta", theta_spec, "theta grid, 'value' or 'min:max:steps'");
    scan->add_option("--r", r_spec, "r grid");
    scan->add_option("--omega1t", omega1t_spec, "omega1*t grid");
    scan->add_option("--n", n, "field inhomogeneity");
    scan->add_option("--J", J, "rescaled coupling");
    scan->add_option("--omega1", omega1, "reference frequency");
    scan->add_option("--sing-tol", sing_tol, "singularity threshold");
    scan->add_option("--out", out_path, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "closed-form vs engine cross-check");
    int points = 21;
    double verify_tol = gp::kVerifyExclusionTol;
    verify->add_option("--points", points, "theta samples on the grid (>= 2)");
    verify->add_option("--sing-tol", verify_tol,
                       "visibility below which points are skipped as singular");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed())
            return run_compute(family, theta, r, n, J, omega1t, omega1, sing_tol);

        if (sweep->parsed()) {
            gp::SweepConfig config;
            if (!config_path.empty()) {
                std::ifstream cfg(config_path);
                if (!cfg)
                    throw IoError("cannot open config file '" + config_path + "'");
                config = gp::parse_config_file(cfg, config);
            }
            const auto fam = gp::parse_family(family);
            if (sweep->count("--family")) {
                if (!fam)
                    throw std::invalid_argument("--family must be 'phi' or 'psi'");
                config.family = *fam;
            }
            if (sweep->count("--theta"))
                config.theta = theta;
            if (sweep->count("--r"))
                config.r = r;
            if (sweep->count("--n"))
                config.n = n;
            if (sweep->count("--J"))
                config.J = J;
            if (sweep->count("--omega1t"))
                config.omega1t = omega1t;
            if (sweep->count("--omega1"))
                config.omega1 = omega1;
            if (sweep->count("--sing-tol"))
                config.sing_tol = sing_tol;
            if (!axis1_spec.empty()) {
                if (config.axes.empty())
                    config.axes.resize(1);
                config.axes[0] = gp::parse_axis_spec(axis1_spec);
            }
            if (!axis2_spec.empty()) {
                config.axes.resize(2);
                config.axes[1] = gp::parse_axis_spec(axis2_spec);
            }
            if (!format_str.empty()) {
                const auto fmt = gp::parse_format(format_str);
                if (!fmt)
                    throw std::invalid_argument("--format must be 'csv' or 'jsonl'");
                config.format = *fmt;
            }
            if (!out_path.empty())
                config.out = out_path;
            return run_sweep_cmd(config, config.out);
        }

        if (figure->parsed()) {
            std::optional<gp::OutputFormat> fmt;
            if (!format_str.empty()) {
                fmt = gp::parse_format(format_str);
                if (!fmt)
                    throw std::invalid_argument("--format must be 'csv' or 'jsonl'");
            }
            return run_figure(figure_id, out_path, fmt);
        }

        if (scan->parsed())
            return run_scan(family, theta_spec, r_spec, omega1t_spec, n, J, omega1, sing_tol,
                            out_path);

        if (verify->parsed())
            return run_verify(points, verify_tol);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
