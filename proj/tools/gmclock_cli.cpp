#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gmclock/errors.hpp"
#include "gmclock/orbit.hpp"
#include "gmclock/scenario.hpp"

namespace {

using namespace gmclock;

struct BodyOptions {
    std::string preset;
    std::optional<double> mass;
    std::optional<double> radius;
    std::optional<double> spin;
};

void add_body_options(CLI::App* cmd, BodyOptions& opts) {
    cmd->add_option("--preset", opts.preset, "Body preset (see 'gmclock presets list')");
    cmd->add_option("--mass-kg", opts.mass, "Body mass [kg]");
    cmd->add_option("--radius-m", opts.radius, "Body radius [m]");
    cmd->add_option("--spin-omega-rad-s", opts.spin, "Body spin angular frequency [rad/s]");
}

void resolve_body(const BodyOptions& opts, Scenario& scenario) {
    bool have_body = false;
    if (!opts.preset.empty()) {
        const Preset* preset = find_preset(opts.preset);
        if (preset == nullptr) {
            throw InvalidInputError("unknown preset '" + opts.preset + "'");
        }
        scenario.body = preset->body;
        scenario.constants = preset->constants;
        have_body = true;
    }
    if (opts.mass) scenario.body.mass = *opts.mass, have_body = true;
    if (opts.radius) scenario.body.radius = *opts.radius, have_body = true;
    if (opts.spin) scenario.body.spin_omega = *opts.spin, have_body = true;
    if (!have_body) {
        throw InvalidInputError("no body given: use --preset or --mass-kg/--radius-m/--spin-omega-rad-s");
    }
}

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Report format: csv or text")
        ->check(CLI::IsMember({"csv", "text"}));
    cmd->add_option("--out", opts.out_path, "Write the report to a file instead of stdout");
}

int emit_result(const ScenarioResult& result, const OutputOptions& output) {
    for (const RowError& err : result.errors) {
        std::cerr << "error: method " << method_name(err.method) << " at r = "
                  << format_value(err.r) << ": " << err.message << "\n";
    }
    const ReportFormat format = report_format_from_name(output.format);
    if (output.out_path.empty()) {
        emit_report(std::cout, result.rows, format);
    } else {
        std::ofstream out(output.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open '" << output.out_path << "' for writing\n";
            return 1;
        }
        emit_report(out, result.rows, format);
    }
    return result.errors.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gravitomagnetic clock effect toolkit"};
    app.require_subcommand(1);

    struct MethodCommand {
        const char* name = nullptr;
        const char* help = nullptr;
        Method method = Method::kerr;
        CLI::App* cmd = nullptr;
        BodyOptions body;
        OutputOptions output;
        std::vector<double> radii;
        double tolerance = 1e-12;
    };

    std::vector<MethodCommand> commands(4);
    commands[0].name = "kerr";
    commands[0].help = "Exact circular-orbit route";
    commands[0].method = Method::kerr;
    commands[1].name = "semiclassical";
    commands[1].help = "Rotor-state closure route";
    commands[1].method = Method::semiclassical;
    commands[2].name = "gem";
    commands[2].help = "Field-splitting route";
    commands[2].method = Method::gem;
    commands[3].name = "integrate";
    commands[3].help = "Numerical orbit oracle";
    commands[3].method = Method::oracle;

    std::string dump_path;
    std::string dump_sense = "prograde";

    for (MethodCommand& mc : commands) {
        mc.cmd = app.add_subcommand(mc.name, mc.help);
        add_body_options(mc.cmd, mc.body);
        add_output_options(mc.cmd, mc.output);
        mc.cmd->add_option("--radii-m", mc.radii, "Orbit radii [m]")
            ->required()
            ->delimiter(',');
        mc.cmd->add_option("--tolerance", mc.tolerance,
                           "Integrator relative tolerance (oracle only)");
    }

    CLI::App* integrate_cmd = commands[3].cmd;
    integrate_cmd->add_option("--dump-trajectory", dump_path,
                              "Write the integrated samples as 'time x y vx vy' lines "
                              "(single radius only)");
    integrate_cmd->add_option("--dump-sense", dump_sense, "Sense of the dumped orbit")
        ->check(CLI::IsMember({"prograde", "retrograde"}));

    // scenario run <file>
    CLI::App* scenario_cmd = app.add_subcommand("scenario", "Scenario-file driven runs");
    scenario_cmd->require_subcommand(1);
    CLI::App* scenario_run = scenario_cmd->add_subcommand("run", "Run a scenario file");
    std::string scenario_path;
    OutputOptions scenario_output;
    std::optional<double> scenario_tolerance;
    scenario_run->add_option("file", scenario_path, "Scenario file")->required();
    add_output_options(scenario_run, scenario_output);
    scenario_run->add_option("--tolerance", scenario_tolerance,
                             "Override the scenario's integrator tolerance");

    // presets list
    CLI::App* presets_cmd = app.add_subcommand("presets", "Built-in body presets");
    CLI::App* presets_list = presets_cmd->add_subcommand("list", "List preset bodies");

    CLI11_PARSE(app, argc, argv);

    try {
        for (const MethodCommand& mc : commands) {
            if (!mc.cmd->parsed()) continue;

            Scenario scenario;
            scenario.name = mc.name;
            resolve_body(mc.body, scenario);
            scenario.radii = mc.radii;
            scenario.methods = {mc.method};
            scenario.integrator.relative_tolerance = mc.tolerance;
            scenario.validate();

            if (mc.method == Method::oracle && !dump_path.empty()) {
                if (scenario.radii.size() != 1) {
                    std::cerr << "error: --dump-trajectory needs exactly one radius\n";
                    return 1;
                }
                const OrbitSense sense = dump_sense == "prograde" ? OrbitSense::prograde
                                                                  : OrbitSense::retrograde;
                const ParticleState launch = circular_launch(
                    scenario.radii.front(), sense, scenario.body, scenario.constants);
                const Trajectory traj =
                    integrate_revolutions(launch, scenario.body, scenario.integrator,
                                          scenario.constants, kOracleRevolutions);
                std::ofstream out(dump_path, std::ios::binary);
                if (!out) {
                    std::cerr << "error: cannot open '" << dump_path << "' for writing\n";
                    return 1;
                }
                write_trajectory(out, traj);
            }

            return emit_result(run_scenario(scenario), mc.output);
        }

        if (scenario_run->parsed()) {
            Scenario scenario = load_scenario_file(scenario_path);
            if (scenario_tolerance) {
                scenario.integrator.relative_tolerance = *scenario_tolerance;
                scenario.validate();
            }
            return emit_result(run_scenario(scenario), scenario_output);
        }

        if (presets_list->parsed()) {
            for (const Preset& p : presets()) {
                std::cout << p.name << ": mass_kg=" << format_value(p.body.mass)
                          << " radius_m=" << format_value(p.body.radius)
                          << " spin_omega_rad_s=" << format_value(p.body.spin_omega)
                          << " G=" << format_value(p.constants.G)
                          << " c=" << format_value(p.constants.c)
                          << " hbar=" << format_value(p.constants.hbar) << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    return 0;
}
