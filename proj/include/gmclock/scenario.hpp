#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmclock/constants.hpp"
#include "gmclock/orbit.hpp"
#include "gmclock/report.hpp"

namespace gmclock {

/// One configured run: a central body, a set of orbit radii, and the
/// methods to evaluate at each radius.
struct Scenario {
    std::string name;
    CentralBody body;
    PhysicalConstants constants;
    std::vector<double> radii;    // m, kept sorted ascending
    std::vector<Method> methods;  // evaluated in listed order

    IntegratorConfig integrator;

    /// Throws ValidationError naming the violated invariant.
    void validate() const;
};

struct Preset {
    std::string name;
    CentralBody body;
    PhysicalConstants constants;
};

const std::vector<Preset>& presets();
const Preset* find_preset(std::string_view name);

/// Parses the scenario key-value format:
///   sections [body], [orbit], [run]; lines "key = value"; '#' comments.
/// Keys: preset, mass_kg, radius_m, spin_omega_rad_s ([body]);
///       radii_m ([orbit], comma-separated);
///       methods (comma-separated), rel_tol ([run]).
/// Unknown keys and malformed lines raise ParseError with the line number;
/// the assembled scenario is validated before being returned.
Scenario load_scenario(std::istream& in, std::string name);

/// Reads path and names the scenario after the file stem.
Scenario load_scenario_file(const std::string& path);

/// One output row of a scenario run.
struct ReportRow {
    std::string scenario;
    Method method = Method::kerr;
    double r = 0.0;        // m
    double omega_k = 0.0;  // rad/s
    double t_plus = 0.0;   // s
    double t_minus = 0.0;  // s
    double delta_t = 0.0;  // s
    std::optional<double> delta_e;       // J; semiclassical and gem rows
    double epsilon = 0.0;                // J omega_k/(M c^2)
    std::optional<double> energy_drift;  // oracle diagnostics
};

/// A (method, radius) cell that failed, with the reason.
struct RowError {
    Method method = Method::kerr;
    double r = 0.0;
    std::string message;
};

struct ScenarioResult {
    std::vector<ReportRow> rows;
    std::vector<RowError> errors;
};

/// Evaluates every (method, radius) cell; row order is methods as listed,
/// radii ascending. Failing cells are collected in errors and do not abort
/// the rest of the run.
ScenarioResult run_scenario(const Scenario& scenario);

enum class ReportFormat { csv, text };

ReportFormat report_format_from_name(std::string_view name);

/// CSV: fixed header, 12 significant digits, '.' decimal separator,
/// newline-terminated lines; empty fields where a column does not apply.
/// Text: the same values as an aligned table.
void emit_report(std::ostream& out, const std::vector<ReportRow>& rows,
                 ReportFormat format);

/// Formats a double with 12 significant digits (the CSV number format).
std::string format_value(double v);

}  // namespace gmclock
