#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gmclock/errors.hpp"
#include "gmclock/scenario.hpp"
#include "support.hpp"

using namespace gmclock;

namespace {

Scenario load_text(const std::string& text, std::string name = "test") {
    std::istringstream in(text);
    return load_scenario(in, std::move(name));
}

const std::string kToyScenario =
    "# toy system, two radii\n"
    "[body]\n"
    "preset = toy-unit\n"
    "spin_omega_rad_s = 7.9057e-3\n"
    "\n"
    "[orbit]\n"
    "radii_m = 100, 10\n"
    "\n"
    "[run]\n"
    "methods = kerr, semiclassical, gem\n"
    "rel_tol = 1e-12\n";

}  // namespace

TEST_CASE("presets expand to full bodies") {
    const Preset* toy = find_preset("toy-unit");
    REQUIRE(toy != nullptr);
    CHECK(toy->body.mass == 1.0);
    CHECK(toy->body.radius == 1.0);
    CHECK(toy->body.spin_omega == 1.0);
    CHECK(toy->constants.G == 1.0);
    CHECK(toy->constants.c == 1.0);
    CHECK(toy->constants.hbar == 1.0);

    const Preset* earth = find_preset("earth-uniform");
    REQUIRE(earth != nullptr);
    CHECK(earth->body.mass == 5.972e24);
    CHECK(earth->body.radius == 6.371e6);
    CHECK(earth->body.spin_omega == 7.2921e-5);
    CHECK(earth->constants.G == 6.674300000e-11);

    CHECK(find_preset("no-such-preset") == nullptr);
}

TEST_CASE("scenario parsing: happy path") {
    const Scenario s = load_text(kToyScenario);
    CHECK(s.name == "test");
    CHECK(s.body.mass == 1.0);
    CHECK(s.body.spin_omega == 7.9057e-3);  // explicit key overrides the preset value
    REQUIRE(s.radii.size() == 2);
    CHECK(s.radii[0] == 10.0);  // sorted ascending
    CHECK(s.radii[1] == 100.0);
    REQUIRE(s.methods.size() == 3);
    CHECK(s.methods[0] == Method::kerr);
    CHECK(s.methods[1] == Method::semiclassical);
    CHECK(s.methods[2] == Method::gem);
    CHECK(s.integrator.relative_tolerance == 1e-12);
}

TEST_CASE("scenario parsing: explicit body") {
    const Scenario s = load_text(
        "[body]\n"
        "mass_kg = 5.972e24\n"
        "radius_m = 6.371e6\n"
        "spin_omega_rad_s = 7.2921e-5\n"
        "[orbit]\n"
        "radii_m = 7e6\n"
        "[run]\n"
        "methods = gem\n");
    CHECK(s.body.mass == 5.972e24);
    CHECK(s.constants.G == 6.674300000e-11);  // defaults stay CODATA
}

TEST_CASE("scenario parsing: errors carry line numbers") {
    const auto line_of = [](const std::string& text) {
        try {
            (void)load_text(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };

    CHECK(line_of("[body]\npreset = toy-unit\nbogus_key = 1\n") == 3);
    CHECK(line_of("[weird]\n") == 1);
    CHECK(line_of("[body]\npreset toy-unit\n") == 2);
    CHECK(line_of("[body]\nmass_kg = not-a-number\n") == 2);
    CHECK(line_of("preset = toy-unit\n") == 1);
    CHECK(line_of("[run]\nmethods = kerr, warp\n") == 2);
    CHECK(line_of("[orbit]\nradii_m = 1,,2\n") == 2);
}

TEST_CASE("scenario validation names the violated invariant") {
    CHECK_THROWS_AS((void)load_text("[body]\npreset = toy-unit\n[orbit]\nradii_m = 10\n"),
                    ValidationError);  // no methods
    CHECK_THROWS_AS((void)load_text("[body]\npreset = toy-unit\n[run]\nmethods = kerr\n"),
                    ValidationError);  // no radii
    CHECK_THROWS_AS(
        (void)load_text("[body]\npreset = toy-unit\n[orbit]\nradii_m = 0.5\n"
                        "[run]\nmethods = kerr\n"),
        ValidationError);  // radius below the body surface
    CHECK_THROWS_AS(
        (void)load_text("[body]\npreset = toy-unit\n[orbit]\nradii_m = 10\n"
                        "[run]\nmethods = kerr, kerr\n"),
        ValidationError);  // duplicate method
    CHECK_THROWS_AS(
        (void)load_text("[body]\npreset = toy-unit\n[orbit]\nradii_m = 10\n"
                        "[run]\nmethods = kerr\nrel_tol = 1e-3\n"),
        ValidationError);  // tolerance above the 1e-6 ceiling
    CHECK_THROWS_AS((void)load_text("[orbit]\nradii_m = 10\n[run]\nmethods = kerr\n"),
                    ValidationError);  // no body at all
}

TEST_CASE("run_scenario row order and cross-method agreement") {
    const Scenario s = load_text(kToyScenario);
    const ScenarioResult result = run_scenario(s);
    CHECK(result.errors.empty());
    REQUIRE(result.rows.size() == 6);

    // methods in listed order, radii ascending within each method
    CHECK(result.rows[0].method == Method::kerr);
    CHECK(result.rows[0].r == 10.0);
    CHECK(result.rows[1].method == Method::kerr);
    CHECK(result.rows[1].r == 100.0);
    CHECK(result.rows[2].method == Method::semiclassical);
    CHECK(result.rows[4].method == Method::gem);

    for (std::size_t i = 0; i < 2; ++i) {
        const double kerr_delta = result.rows[0 + i].delta_t;
        CHECK(testkit::rel_diff(result.rows[2 + i].delta_t, kerr_delta) < 1e-12);
        CHECK(testkit::rel_diff(result.rows[4 + i].delta_t, kerr_delta) < 1e-12);
    }

    // delta_T is radius independent for the analytic methods.
    CHECK(testkit::rel_diff(result.rows[0].delta_t, result.rows[1].delta_t) < 1e-12);

    // delta_E only where it applies.
    CHECK_FALSE(result.rows[0].delta_e.has_value());
    CHECK(result.rows[2].delta_e.has_value());
    CHECK(result.rows[4].delta_e.has_value());
    CHECK_FALSE(result.rows[0].energy_drift.has_value());
}

TEST_CASE("run_scenario with the oracle stays within its tolerance budget") {
    Scenario s = load_text(kToyScenario);
    s.methods = {Method::kerr, Method::oracle};
    s.radii = {10.0};
    const ScenarioResult result = run_scenario(s);
    REQUIRE(result.errors.empty());
    REQUIRE(result.rows.size() == 2);
    const ReportRow& kerr_row = result.rows[0];
    const ReportRow& oracle_row = result.rows[1];
    CHECK(oracle_row.energy_drift.has_value());
    CHECK(*oracle_row.energy_drift < 1e-9);
    // Documented oracle budget: 2% of the effect.
    CHECK(std::abs(oracle_row.delta_t - kerr_row.delta_t) < 0.02 * kerr_row.delta_t);
}

TEST_CASE("zero spin zeroes every method") {
    Scenario s = load_text(kToyScenario);
    s.body.spin_omega = 0.0;
    s.methods = {Method::kerr, Method::semiclassical, Method::gem, Method::oracle};
    s.radii = {10.0};
    const ScenarioResult result = run_scenario(s);
    CHECK(result.errors.empty());
    for (const ReportRow& row : result.rows) {
        CHECK(std::abs(row.delta_t) < 1e-9 * row.t_plus);
        CHECK(row.epsilon == 0.0);
    }
}

TEST_CASE("negative spin reports co-rotating periods consistently") {
    Scenario s = load_text(kToyScenario);
    s.body.spin_omega = -s.body.spin_omega;
    s.methods = {Method::kerr, Method::gem, Method::oracle};
    s.radii = {10.0};
    const ScenarioResult result = run_scenario(s);
    REQUIRE(result.errors.empty());
    for (const ReportRow& row : result.rows) {
        CHECK(row.delta_t > 0.0);
        CHECK(row.t_plus > row.t_minus);
    }
    CHECK(testkit::rel_diff(result.rows[0].delta_t, result.rows[2].delta_t) < 0.02);
}

TEST_CASE("failing cells are reported inline and do not abort the run") {
    Scenario s = load_text(kToyScenario);
    // Spin so hard that a*omega_k > 1 at the inner radius: kerr and
    // semiclassical reject it there, gem hits the regime guard.
    s.body.spin_omega = 200.0;
    s.radii = {2.0, 1e4};
    s.methods = {Method::kerr, Method::gem};
    const ScenarioResult result = run_scenario(s);
    CHECK(!result.errors.empty());
    CHECK(!result.rows.empty());
    for (const RowError& err : result.errors) {
        CHECK(err.r == 2.0);
        CHECK(!err.message.empty());
    }
    for (const ReportRow& row : result.rows) {
        CHECK(row.r == 1e4);
    }
}

TEST_CASE("csv emission round-trips 12 significant digits") {
    const Scenario s = load_text(kToyScenario);
    const ScenarioResult result = run_scenario(s);

    std::ostringstream out;
    emit_report(out, result.rows, ReportFormat::csv);
    const std::string csv = out.str();

    std::istringstream in(csv);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header ==
          "scenario,method,r_m,omega_k_rad_s,T_plus_s,T_minus_s,delta_T_s,delta_E_J,"
          "epsilon,energy_drift");

    std::string line;
    std::size_t row_index = 0;
    while (std::getline(in, line)) {
        REQUIRE(row_index < result.rows.size());
        std::vector<std::string> cells;
        std::stringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) cells.push_back(cell);
        REQUIRE(cells.size() >= 9);
        const ReportRow& row = result.rows[row_index];
        CHECK(cells[0] == row.scenario);
        CHECK(cells[1] == method_name(row.method));
        // Re-reading a %.12g value and re-formatting it must be lossless.
        CHECK(format_value(std::stod(cells[6])) == cells[6]);
        CHECK(testkit::rel_diff(std::stod(cells[6]), row.delta_t) < 1e-11);
        ++row_index;
    }
    CHECK(row_index == result.rows.size());

    // Byte-identical on a second run.
    std::ostringstream again;
    emit_report(again, run_scenario(s).rows, ReportFormat::csv);
    CHECK(again.str() == csv);
}

TEST_CASE("empty row list emits a header-only csv") {
    std::ostringstream out;
    emit_report(out, {}, ReportFormat::csv);
    CHECK(out.str() ==
          "scenario,method,r_m,omega_k_rad_s,T_plus_s,T_minus_s,delta_T_s,delta_E_J,"
          "epsilon,energy_drift\n");
}

TEST_CASE("text emission carries the same values") {
    const Scenario s = load_text(kToyScenario);
    const ScenarioResult result = run_scenario(s);
    std::ostringstream out;
    emit_report(out, result.rows, ReportFormat::text);
    const std::string text = out.str();
    CHECK(text.find("delta_T_s") != std::string::npos);
    CHECK(text.find(format_value(result.rows[0].delta_t)) != std::string::npos);
}

TEST_CASE("earth preset reproduces the desk numbers") {
    const Scenario s = load_text(
        "[body]\npreset = earth-uniform\n"
        "[orbit]\nradii_m = 7e6\n"
        "[run]\nmethods = kerr, semiclassical, gem\n",
        "earth");
    const ScenarioResult result = run_scenario(s);
    REQUIRE(result.errors.empty());
    for (const ReportRow& row : result.rows) {
        // Frozen 50-digit value of 4 pi J / (M c^2) for the uniform Earth.
        CHECK(testkit::rel_diff(row.delta_t, 1.6553745552113388e-7) < 1e-12);
    }
}

TEST_CASE("report format names") {
    CHECK(report_format_from_name("csv") == ReportFormat::csv);
    CHECK(report_format_from_name("text") == ReportFormat::text);
    CHECK_THROWS_AS((void)report_format_from_name("yaml"), InvalidInputError);
    CHECK_THROWS_AS((void)method_from_name("warp"), InvalidInputError);
}
