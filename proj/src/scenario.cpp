#include "gmclock/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "gmclock/errors.hpp"
#include "gmclock/gem.hpp"
#include "gmclock/kerr.hpp"
#include "gmclock/semiclassical.hpp"

namespace gmclock {

namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

double parse_number(const std::string& text, int line) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) {
            throw ParseError("trailing characters after number '" + text + "'", line);
        }
        return value;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + text + "'", line);
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        items.push_back(trim(item));
    }
    return items;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> table = {
        // Uniform-density Earth: mass, mean radius, sidereal spin rate.
        {"earth-uniform", {5.972e24, 6.371e6, 7.2921e-5}, PhysicalConstants{}},
        // All-ones toy system for scale-free checks.
        {"toy-unit", {1.0, 1.0, 1.0}, unit_constants()},
    };
    return table;
}

const Preset* find_preset(std::string_view name) {
    for (const Preset& p : presets()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

void Scenario::validate() const {
    if (!constants.valid()) {
        throw ValidationError("constants must be positive and finite");
    }
    if (!body.valid()) {
        throw ValidationError("body: mass must be positive and finite, radius non-negative");
    }
    if (radii.empty()) {
        throw ValidationError("radii must be non-empty");
    }
    for (const double r : radii) {
        if (!std::isfinite(r) || r <= body.radius || r <= 0.0) {
            throw ValidationError("every radius must be finite and greater than the body radius");
        }
    }
    if (methods.empty()) {
        throw ValidationError("methods must be non-empty");
    }
    for (std::size_t i = 0; i < methods.size(); ++i) {
        for (std::size_t j = i + 1; j < methods.size(); ++j) {
            if (methods[i] == methods[j]) {
                throw ValidationError("methods must not repeat");
            }
        }
    }
    if (!integrator.valid()) {
        throw ValidationError("integrator: relative_tolerance in (0, 1e-6], max_steps > 0, "
                              "crossing_tolerance > 0");
    }
}

Scenario load_scenario(std::istream& in, std::string name) {
    Scenario scenario;
    scenario.name = std::move(name);

    enum class Section { none, body, orbit, run };
    Section section = Section::none;
    bool body_set = false;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto comment = raw.find('#');
        if (comment != std::string::npos) raw.erase(comment);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ParseError("unterminated section header", line_no);
            }
            const std::string section_name = trim(line.substr(1, line.size() - 2));
            if (section_name == "body") {
                section = Section::body;
            } else if (section_name == "orbit") {
                section = Section::orbit;
            } else if (section_name == "run") {
                section = Section::run;
            } else {
                throw ParseError("unknown section [" + section_name + "]", line_no);
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected 'key = value'", line_no);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError("empty key", line_no);
        if (value.empty()) throw ParseError("empty value for key '" + key + "'", line_no);

        switch (section) {
        case Section::none:
            throw ParseError("key '" + key + "' outside of any section", line_no);
        case Section::body:
            if (key == "preset") {
                const Preset* preset = find_preset(value);
                if (preset == nullptr) {
                    throw ParseError("unknown preset '" + value + "'", line_no);
                }
                scenario.body = preset->body;
                scenario.constants = preset->constants;
                body_set = true;
            } else if (key == "mass_kg") {
                scenario.body.mass = parse_number(value, line_no);
                body_set = true;
            } else if (key == "radius_m") {
                scenario.body.radius = parse_number(value, line_no);
                body_set = true;
            } else if (key == "spin_omega_rad_s") {
                scenario.body.spin_omega = parse_number(value, line_no);
                body_set = true;
            } else {
                throw ParseError("unknown key '" + key + "' in [body]", line_no);
            }
            break;
        case Section::orbit:
            if (key == "radii_m") {
                for (const std::string& item : split_list(value)) {
                    if (item.empty()) {
                        throw ParseError("empty entry in radii_m", line_no);
                    }
                    scenario.radii.push_back(parse_number(item, line_no));
                }
            } else {
                throw ParseError("unknown key '" + key + "' in [orbit]", line_no);
            }
            break;
        case Section::run:
            if (key == "methods") {
                for (const std::string& item : split_list(value)) {
                    try {
                        scenario.methods.push_back(method_from_name(item));
                    } catch (const InvalidInputError& e) {
                        throw ParseError(e.what(), line_no);
                    }
                }
            } else if (key == "rel_tol") {
                scenario.integrator.relative_tolerance = parse_number(value, line_no);
            } else {
                throw ParseError("unknown key '" + key + "' in [run]", line_no);
            }
            break;
        }
    }

    if (!body_set) {
        throw ValidationError("scenario defines no body (preset or explicit fields)");
    }
    std::sort(scenario.radii.begin(), scenario.radii.end());
    scenario.validate();
    return scenario;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open scenario file '" + path + "'");
    }
    return load_scenario(in, std::filesystem::path(path).stem().string());
}

namespace {

ReportRow make_row(const Scenario& s, Method method, double r, double omega_k,
                   double epsilon) {
    ReportRow row;
    row.scenario = s.name;
    row.method = method;
    row.r = r;
    row.omega_k = omega_k;
    row.epsilon = epsilon;
    return row;
}

}  // namespace

ScenarioResult run_scenario(const Scenario& scenario) {
    scenario.validate();

    ScenarioResult result;
    const DerivedBody derived = derive_body(scenario.body, scenario.constants);
    // Senses are labelled relative to the source spin: t_plus co-rotates.
    const double a_co = std::abs(derived.spin_parameter);
    const double j_co = std::abs(derived.spin_angular_momentum);

    std::vector<double> radii = scenario.radii;
    std::sort(radii.begin(), radii.end());

    for (const Method method : scenario.methods) {
        for (const double r : radii) {
            const double omega_k =
                keplerian_frequency(scenario.body.mass, r, scenario.constants);
            const double epsilon =
                first_order_epsilon(j_co, scenario.body.mass, omega_k, scenario.constants);
            ReportRow row = make_row(scenario, method, r, omega_k, epsilon);
            try {
                switch (method) {
                case Method::kerr: {
                    const ClockEffectReport report =
                        periods_from_frequencies(kerr_frequencies(a_co, omega_k));
                    row.t_plus = report.t_plus;
                    row.t_minus = report.t_minus;
                    row.delta_t = report.delta_t;
                    break;
                }
                case Method::semiclassical: {
                    const ClockEffectReport report =
                        quantum_clock_effect(a_co, omega_k, scenario.constants);
                    const LevelEnergies levels =
                        level_energies(a_co, omega_k, scenario.constants);
                    row.t_plus = report.t_plus;
                    row.t_minus = report.t_minus;
                    row.delta_t = report.delta_t;
                    row.delta_e = levels.e_plus - levels.e_minus;
                    break;
                }
                case Method::gem: {
                    const LevelPair pair =
                        level_pair(j_co, scenario.body.mass, omega_k, scenario.constants);
                    const FirstOrderPeriods periods = periods_first_order(
                        pair, j_co, scenario.body.mass, omega_k, scenario.constants);
                    row.t_plus = periods.report.t_plus;
                    row.t_minus = periods.report.t_minus;
                    row.delta_t = periods.report.delta_t;
                    row.delta_e = pair.delta_e;
                    break;
                }
                case Method::oracle: {
                    const OracleMeasurement measured = measure_clock_effect(
                        scenario.body, r, scenario.integrator, scenario.constants);
                    row.t_plus = measured.report.t_plus;
                    row.t_minus = measured.report.t_minus;
                    row.delta_t = measured.report.delta_t;
                    row.energy_drift = std::max(measured.co_rotating.energy_drift,
                                                measured.counter_rotating.energy_drift);
                    break;
                }
                }
                result.rows.push_back(std::move(row));
            } catch (const Error& e) {
                result.errors.push_back({method, r, e.what()});
            }
        }
    }
    return result;
}

ReportFormat report_format_from_name(std::string_view name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    throw InvalidInputError("unknown report format '" + std::string(name) +
                            "' (expected csv or text)");
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

const char* const kHeader[] = {"scenario", "method",    "r_m",     "omega_k_rad_s",
                               "T_plus_s", "T_minus_s", "delta_T_s", "delta_E_J",
                               "epsilon",  "energy_drift"};

std::vector<std::string> row_cells(const ReportRow& row) {
    return {row.scenario,
            std::string(method_name(row.method)),
            format_value(row.r),
            format_value(row.omega_k),
            format_value(row.t_plus),
            format_value(row.t_minus),
            format_value(row.delta_t),
            row.delta_e ? format_value(*row.delta_e) : std::string{},
            format_value(row.epsilon),
            row.energy_drift ? format_value(*row.energy_drift) : std::string{}};
}

void emit_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    for (std::size_t i = 0; i < std::size(kHeader); ++i) {
        out << (i == 0 ? "" : ",") << kHeader[i];
    }
    out << '\n';
    for (const ReportRow& row : rows) {
        const std::vector<std::string> cells = row_cells(row);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << (i == 0 ? "" : ",") << cells[i];
        }
        out << '\n';
    }
}

void emit_text(std::ostream& out, const std::vector<ReportRow>& rows) {
    constexpr std::size_t columns = std::size(kHeader);
    std::vector<std::size_t> width(columns);
    for (std::size_t i = 0; i < columns; ++i) width[i] = std::string_view(kHeader[i]).size();
    std::vector<std::vector<std::string>> table;
    table.reserve(rows.size());
    for (const ReportRow& row : rows) {
        table.push_back(row_cells(row));
        for (std::size_t i = 0; i < columns; ++i) {
            width[i] = std::max(width[i], table.back()[i].size());
        }
    }
    const auto emit_line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < columns; ++i) {
            out << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
            out << (i + 1 == columns ? "" : "  ");
        }
        out << '\n';
    };
    emit_line({kHeader, kHeader + columns});
    for (const auto& cells : table) emit_line(cells);
}

}  // namespace

void emit_report(std::ostream& out, const std::vector<ReportRow>& rows,
                 ReportFormat format) {
    if (format == ReportFormat::csv) {
        emit_csv(out, rows);
    } else {
        emit_text(out, rows);
    }
    if (!out) {
        throw Error("report emission failed: output stream in error state");
    }
}

}  // namespace gmclock
