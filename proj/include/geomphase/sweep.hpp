#pragma once

// Parameter-sweep harness: grids over the dimensionless controls
// (theta, r, n = omega2/omega1, J = g/omega1, omega1*t), record evaluation,
// and deterministic CSV / JSON-lines serialization.
//
// Output layout (both commands and both formats share it, so a manual sweep
// with a preset's resolved configuration is byte-identical to the preset):
//   - '#'-prefixed metadata lines echoing the resolved configuration
//     (CSV) or a single leading {"meta": ...} object (JSONL),
//   - one header row naming every field (CSV),
//   - one record per grid point, axis 1 outermost, axis 2 innermost.
// Numbers are serialized with 12 significant digits; a singular point
// carries an empty phase field (CSV) or null (JSONL).

#include "geomphase/closed_form.hpp"
#include "geomphase/phase_engine.hpp"
#include "geomphase/spin_model.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gp {

/// "%.12g" — 12 significant digits, enough to verify 1e-9 tolerances from files.
inline std::string fmt_g12(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

enum class SweepParam { Theta, R, N, J, Omega1T };

inline const char* sweep_param_name(SweepParam p)
{
    switch (p) {
        case SweepParam::Theta: return "theta";
        case SweepParam::R: return "r";
        case SweepParam::N: return "n";
        case SweepParam::J: return "J";
        case SweepParam::Omega1T: return "omega1t";
    }
    return "?";
}

inline std::optional<SweepParam> parse_sweep_param(std::string_view s)
{
    if (s == "theta") return SweepParam::Theta;
    if (s == "r") return SweepParam::R;
    if (s == "n") return SweepParam::N;
    if (s == "J" || s == "j") return SweepParam::J;
    if (s == "omega1t") return SweepParam::Omega1T;
    return std::nullopt;
}

/// One swept axis: either `steps` uniformly spaced values over [min, max]
/// or an explicit value list (used by the multi-curve figure presets).
struct AxisSpec {
    SweepParam param = SweepParam::Theta;
    bool uniform = true;
    double min = 0.0, max = 0.0;
    int steps = 0;
    std::vector<double> explicit_values;

    static AxisSpec make_uniform(SweepParam p, double min, double max, int steps)
    {
        AxisSpec a;
        a.param = p;
        a.uniform = true;
        a.min = min;
        a.max = max;
        a.steps = steps;
        return a;
    }

    static AxisSpec make_list(SweepParam p, std::vector<double> values)
    {
        AxisSpec a;
        a.param = p;
        a.uniform = false;
        a.explicit_values = std::move(values);
        return a;
    }

    void validate() const
    {
        if (uniform) {
            if (steps < 2)
                throw std::invalid_argument("axis: steps must be >= 2");
            if (!(min < max))
                throw std::invalid_argument("axis: min must be < max");
        } else if (explicit_values.empty()) {
            throw std::invalid_argument("axis: empty value list");
        }
    }

    std::vector<double> values() const
    {
        validate();
        if (!uniform)
            return explicit_values;
        std::vector<double> v;
        v.reserve(static_cast<std::size_t>(steps));
        for (int i = 0; i < steps; ++i)
            v.push_back(min + (max - min) * static_cast<double>(i) / (steps - 1));
        return v;
    }

    std::size_t count() const
    {
        return uniform ? static_cast<std::size_t>(steps) : explicit_values.size();
    }
};

enum class OutputFormat { Csv, JsonLines };

inline std::optional<OutputFormat> parse_format(std::string_view s)
{
    if (s == "csv") return OutputFormat::Csv;
    if (s == "jsonl") return OutputFormat::JsonLines;
    return std::nullopt;
}

/// Fixed values plus up to two swept axes; omega2 = n*omega1, g = J*omega1,
/// t = omega1t/omega1 are derived per grid point.
struct SweepConfig {
    StateFamily family = StateFamily::Psi;
    double theta = kPi / 4.0;
    double r = 1.0;
    double n = 1.0;
    double J = 0.0;
    double omega1t = kPi;
    double omega1 = 1.0;
    std::vector<AxisSpec> axes;  // 1 or 2 entries
    double sing_tol = kSingTol;
    OutputFormat format = OutputFormat::Csv;
    std::string out;  // output path; empty means standard output

    bool is_swept(SweepParam p) const
    {
        for (const AxisSpec& a : axes)
            if (a.param == p)
                return true;
        return false;
    }

    void validate() const
    {
        if (axes.empty() || axes.size() > 2)
            throw std::invalid_argument("sweep: need one or two axes");
        if (axes.size() == 2 && axes[0].param == axes[1].param)
            throw std::invalid_argument("sweep: the two axes must sweep different parameters");
        for (const AxisSpec& a : axes)
            a.validate();
        if (!(omega1 > 0.0))
            throw std::invalid_argument("sweep: omega1 must be > 0");
        if (!(sing_tol > 0.0))
            throw std::invalid_argument("sweep: sing_tol must be > 0");
        if (!is_swept(SweepParam::R) && (!(r > 0.0) || r > 1.0))
            throw std::invalid_argument("sweep: r must lie in (0, 1]");
        if (!is_swept(SweepParam::N) && n < 0.0)
            throw std::invalid_argument("sweep: n must be >= 0");
        if (!is_swept(SweepParam::J) && J < 0.0)
            throw std::invalid_argument("sweep: J must be >= 0");
        if (!is_swept(SweepParam::Omega1T) && omega1t < 0.0)
            throw std::invalid_argument("sweep: omega1t must be >= 0");
        for (const AxisSpec& a : axes)
            for (double v : a.values())
                check_param_value(a.param, v);
    }

    static void check_param_value(SweepParam p, double v)
    {
        switch (p) {
            case SweepParam::Theta:
                if (!std::isfinite(v))
                    throw std::invalid_argument("sweep: theta values must be finite");
                break;
            case SweepParam::R:
                if (!(v > 0.0) || v > 1.0)
                    throw std::invalid_argument("sweep: r values must lie in (0, 1]");
                break;
            case SweepParam::N:
                if (v < 0.0)
                    throw std::invalid_argument("sweep: n values must be >= 0");
                break;
            case SweepParam::J:
                if (v < 0.0)
                    throw std::invalid_argument("sweep: J values must be >= 0");
                break;
            case SweepParam::Omega1T:
                if (v < 0.0)
                    throw std::invalid_argument("sweep: omega1t values must be >= 0");
                break;
        }
    }
};

/// One evaluated grid point: every input echoed plus the phase result and
/// the initial state's negativity.
struct SweepRecord {
    StateFamily family = StateFamily::Psi;
    double theta = 0.0, r = 0.0, omega1 = 0.0, omega2 = 0.0, g = 0.0, t = 0.0;
    double n = 0.0, J = 0.0, omega1t = 0.0;
    GPResult gp;
    double negativity = 0.0;
};

inline constexpr const char* kCsvHeader =
    "family,theta,r,omega1,omega2,g,t,n,J,omega1t,phase,trace_magnitude,singular,negativity";

/// Evaluates one grid point through the numeric engine.
inline SweepRecord evaluate_point(StateFamily family, double theta, double r, double n, double J,
                                  double omega1t, double omega1 = 1.0, double sing_tol = kSingTol)
{
    SweepRecord rec;
    rec.family = family;
    rec.theta = theta;
    rec.r = r;
    rec.omega1 = omega1;
    rec.omega2 = n * omega1;
    rec.g = J * omega1;
    rec.t = omega1t / omega1;
    rec.n = n;
    rec.J = J;
    rec.omega1t = omega1t;
    const InitialStateSpec state{family, theta, r};
    const SystemParams params{rec.omega1, rec.omega2, rec.g};
    const ComplexMatrix rho0 = build_initial_state(state);
    rec.gp = geometric_phase(rho0, build_hamiltonian(params), rec.t, sing_tol);
    rec.negativity = negativity(rho0);
    return rec;
}

namespace detail {

inline void apply_param(SweepParam p, double v, double& theta, double& r, double& n, double& J,
                        double& omega1t)
{
    switch (p) {
        case SweepParam::Theta: theta = v; break;
        case SweepParam::R: r = v; break;
        case SweepParam::N: n = v; break;
        case SweepParam::J: J = v; break;
        case SweepParam::Omega1T: omega1t = v; break;
    }
}

}  // namespace detail

/// Evaluates the full grid in row-major order (axis 1 outermost). Exactly
/// prod(steps) records, deterministic for identical configs.
inline std::vector<SweepRecord> run_sweep(const SweepConfig& config)
{
    config.validate();
    const std::vector<double> outer = config.axes[0].values();
    const std::vector<double> inner =
        config.axes.size() == 2 ? config.axes[1].values() : std::vector<double>{0.0};

    std::vector<SweepRecord> records;
    records.reserve(outer.size() * inner.size());
    for (double ov : outer) {
        for (double iv : inner) {
            double theta = config.theta, r = config.r, n = config.n, J = config.J,
                   omega1t = config.omega1t;
            detail::apply_param(config.axes[0].param, ov, theta, r, n, J, omega1t);
            if (config.axes.size() == 2)
                detail::apply_param(config.axes[1].param, iv, theta, r, n, J, omega1t);
            records.push_back(evaluate_point(config.family, theta, r, n, J, omega1t,
                                             config.omega1, config.sing_tol));
        }
    }
    return records;
}

namespace detail {

inline std::string axis_meta(const AxisSpec& a)
{
    std::ostringstream oss;
    oss << sweep_param_name(a.param);
    if (a.uniform) {
        oss << " min=" << fmt_g12(a.min) << " max=" << fmt_g12(a.max) << " steps=" << a.steps;
    } else {
        oss << " values=";
        for (std::size_t i = 0; i < a.explicit_values.size(); ++i) {
            if (i)
                oss << ',';
            oss << fmt_g12(a.explicit_values[i]);
        }
    }
    return oss.str();
}

inline std::string axis_meta_json(const AxisSpec& a)
{
    std::ostringstream oss;
    oss << "{\"param\":\"" << sweep_param_name(a.param) << "\",";
    if (a.uniform) {
        oss << "\"min\":" << fmt_g12(a.min) << ",\"max\":" << fmt_g12(a.max)
            << ",\"steps\":" << a.steps << '}';
    } else {
        oss << "\"values\":[";
        for (std::size_t i = 0; i < a.explicit_values.size(); ++i) {
            if (i)
                oss << ',';
            oss << fmt_g12(a.explicit_values[i]);
        }
        oss << "]}";
    }
    return oss.str();
}

/// Fixed parameters that are not overridden by an axis, in canonical order.
inline std::vector<std::pair<std::string, double>> fixed_params(const SweepConfig& c)
{
    std::vector<std::pair<std::string, double>> out;
    if (!c.is_swept(SweepParam::Theta))
        out.emplace_back("theta", c.theta);
    if (!c.is_swept(SweepParam::R))
        out.emplace_back("r", c.r);
    if (!c.is_swept(SweepParam::N))
        out.emplace_back("n", c.n);
    if (!c.is_swept(SweepParam::J))
        out.emplace_back("J", c.J);
    if (!c.is_swept(SweepParam::Omega1T))
        out.emplace_back("omega1t", c.omega1t);
    out.emplace_back("omega1", c.omega1);
    return out;
}

}  // namespace detail

inline std::string csv_row(const SweepRecord& rec)
{
    std::ostringstream os;
    os << family_name(rec.family) << ',' << fmt_g12(rec.theta) << ',' << fmt_g12(rec.r) << ','
       << fmt_g12(rec.omega1) << ',' << fmt_g12(rec.omega2) << ',' << fmt_g12(rec.g) << ','
       << fmt_g12(rec.t) << ',' << fmt_g12(rec.n) << ',' << fmt_g12(rec.J) << ','
       << fmt_g12(rec.omega1t) << ',' << (rec.gp.singular ? std::string() : fmt_g12(*rec.gp.phase))
       << ',' << fmt_g12(rec.gp.trace_magnitude) << ',' << (rec.gp.singular ? "true" : "false")
       << ',' << fmt_g12(rec.negativity);
    return os.str();
}

inline void write_csv(std::ostream& os, const SweepConfig& config,
                      const std::vector<SweepRecord>& records)
{
    os << "# family=" << family_name(config.family) << '\n';
    os << "# fixed:";
    for (const auto& [name, value] : detail::fixed_params(config))
        os << ' ' << name << '=' << fmt_g12(value);
    os << '\n';
    for (std::size_t i = 0; i < config.axes.size(); ++i)
        os << "# axis" << (i + 1) << ": " << detail::axis_meta(config.axes[i]) << '\n';
    os << "# sing_tol=" << fmt_g12(config.sing_tol) << '\n';
    os << kCsvHeader << '\n';
    for (const SweepRecord& rec : records)
        os << csv_row(rec) << '\n';
}

inline void write_jsonl(std::ostream& os, const SweepConfig& config,
                        const std::vector<SweepRecord>& records)
{
    os << "{\"meta\":{\"family\":\"" << family_name(config.family) << "\",\"fixed\":{";
    const auto fixed = detail::fixed_params(config);
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        if (i)
            os << ',';
        os << '"' << fixed[i].first << "\":" << fmt_g12(fixed[i].second);
    }
    os << "},\"axes\":[";
    for (std::size_t i = 0; i < config.axes.size(); ++i) {
        if (i)
            os << ',';
        os << detail::axis_meta_json(config.axes[i]);
    }
    os << "],\"sing_tol\":" << fmt_g12(config.sing_tol) << "}}\n";
    for (const SweepRecord& rec : records) {
        os << "{\"family\":\"" << family_name(rec.family) << "\",\"theta\":" << fmt_g12(rec.theta)
           << ",\"r\":" << fmt_g12(rec.r) << ",\"omega1\":" << fmt_g12(rec.omega1)
           << ",\"omega2\":" << fmt_g12(rec.omega2) << ",\"g\":" << fmt_g12(rec.g)
           << ",\"t\":" << fmt_g12(rec.t) << ",\"n\":" << fmt_g12(rec.n)
           << ",\"J\":" << fmt_g12(rec.J) << ",\"omega1t\":" << fmt_g12(rec.omega1t)
           << ",\"phase\":" << (rec.gp.singular ? "null" : fmt_g12(*rec.gp.phase))
           << ",\"trace_magnitude\":" << fmt_g12(rec.gp.trace_magnitude)
           << ",\"singular\":" << (rec.gp.singular ? "true" : "false")
           << ",\"negativity\":" << fmt_g12(rec.negativity) << "}\n";
    }
}

inline void write_records(std::ostream& os, const SweepConfig& config,
                          const std::vector<SweepRecord>& records)
{
    if (config.format == OutputFormat::Csv)
        write_csv(os, config, records);
    else
        write_jsonl(os, config, records);
}

/// Parses records back from CSV produced by write_csv ('#' lines and the
/// header row are skipped). Field values round-trip at 12 significant digits.
inline std::vector<SweepRecord> read_csv(std::istream& is)
{
    std::vector<SweepRecord> records;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen) {
            if (line != kCsvHeader)
                throw std::runtime_error("read_csv: unexpected header row: " + line);
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        if (fields.size() != 14)
            throw std::runtime_error("read_csv: expected 14 fields, got " +
                                     std::to_string(fields.size()));
        SweepRecord rec;
        const auto fam = parse_family(fields[0]);
        if (!fam)
            throw std::runtime_error("read_csv: unknown family " + fields[0]);
        rec.family = *fam;
        rec.theta = std::stod(fields[1]);
        rec.r = std::stod(fields[2]);
        rec.omega1 = std::stod(fields[3]);
        rec.omega2 = std::stod(fields[4]);
        rec.g = std::stod(fields[5]);
        rec.t = std::stod(fields[6]);
        rec.n = std::stod(fields[7]);
        rec.J = std::stod(fields[8]);
        rec.omega1t = std::stod(fields[9]);
        rec.gp.singular = fields[12] == "true";
        if (!rec.gp.singular)
            rec.gp.phase = std::stod(fields[10]);
        else if (!fields[10].empty())
            throw std::runtime_error("read_csv: singular record carries a phase value");
        rec.gp.trace_magnitude = std::stod(fields[11]);
        rec.negativity = std::stod(fields[13]);
        records.push_back(rec);
    }
    return records;
}

/// Parses a plain key-value config file ('key = value' lines, '#' comments).
/// Recognized keys: family, theta, r, n, J, omega1t, omega1, sing_tol,
/// format, axis1, axis2. Axis syntax: "param:min:max:steps" or
/// "param:v1,v2,v3".
inline AxisSpec parse_axis_spec(const std::string& text)
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
    if (parts.empty())
        throw std::invalid_argument("axis: empty specification");
    const auto param = parse_sweep_param(parts[0]);
    if (!param)
        throw std::invalid_argument("axis: unknown parameter '" + parts[0] +
                                    "' (expected theta, r, n, J or omega1t)");
    if (parts.size() == 4) {
        return AxisSpec::make_uniform(*param, std::stod(parts[1]), std::stod(parts[2]),
                                      std::stoi(parts[3]));
    }
    if (parts.size() == 2) {
        std::vector<double> values;
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = parts[1].find(',', pos);
            values.push_back(std::stod(parts[1].substr(pos, comma - pos)));
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        return AxisSpec::make_list(*param, std::move(values));
    }
    throw std::invalid_argument("axis: expected 'param:min:max:steps' or 'param:v1,v2,...', got '" +
                                text + "'");
}

inline void apply_config_entry(SweepConfig& config, const std::string& key,
                               const std::string& value)
{
    if (key == "family") {
        const auto fam = parse_family(value);
        if (!fam)
            throw std::invalid_argument("config: unknown family '" + value + "'");
        config.family = *fam;
    } else if (key == "theta") {
        config.theta = std::stod(value);
    } else if (key == "r") {
        config.r = std::stod(value);
    } else if (key == "n") {
        config.n = std::stod(value);
    } else if (key == "J") {
        config.J = std::stod(value);
    } else if (key == "omega1t") {
        config.omega1t = std::stod(value);
    } else if (key == "omega1") {
        config.omega1 = std::stod(value);
    } else if (key == "sing_tol") {
        config.sing_tol = std::stod(value);
    } else if (key == "format") {
        const auto fmt = parse_format(value);
        if (!fmt)
            throw std::invalid_argument("config: unknown format '" + value +
                                        "' (expected csv or jsonl)");
        config.format = *fmt;
    } else if (key == "out") {
        config.out = value;
    } else if (key == "axis1") {
        if (config.axes.empty())
            config.axes.resize(1);
        config.axes[0] = parse_axis_spec(value);
    } else if (key == "axis2") {
        config.axes.resize(2);
        config.axes[1] = parse_axis_spec(value);
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

inline SweepConfig parse_config_file(std::istream& is, SweepConfig base = {})
{
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        const auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty())
            continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        try {
            apply_config_entry(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception& e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return base;
}

}  // namespace gp
