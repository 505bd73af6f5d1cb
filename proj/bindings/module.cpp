#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gmclock/constants.hpp"
#include "gmclock/errors.hpp"
#include "gmclock/gem.hpp"
#include "gmclock/kerr.hpp"
#include "gmclock/orbit.hpp"
#include "gmclock/scenario.hpp"
#include "gmclock/semiclassical.hpp"

namespace py = pybind11;
using namespace gmclock;

namespace {

std::string report_repr(const ClockEffectReport& r) {
    std::ostringstream os;
    os << "ClockEffectReport(method=" << method_name(r.method) << ", t_plus=" << r.t_plus
       << ", t_minus=" << r.t_minus << ", delta_t=" << r.delta_t << ")";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gravitomagnetic clock effect toolkit: exact Kerr circular orbits, "
              "semiclassical rotor closure, GEM level splitting, and a numerical "
              "orbit oracle.";

    py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<DegenerateOrbitError>(m, "DegenerateOrbitError");
    py::register_exception<RegimeError>(m, "RegimeError");
    py::register_exception<NoClosureError>(m, "NoClosureError");
    py::register_exception<InsideSourceError>(m, "InsideSourceError");
    py::register_exception<StepBudgetError>(m, "StepBudgetError");
    py::register_exception<NeedsMoreDataError>(m, "NeedsMoreDataError");
    py::register_exception<ParseError>(m, "ScenarioParseError");
    py::register_exception<ValidationError>(m, "ScenarioValidationError");

    // --- units and body ---------------------------------------------------
    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init<>())
        .def(py::init([](double G, double c, double hbar) {
                 return PhysicalConstants{G, c, hbar};
             }),
             py::arg("G"), py::arg("c"), py::arg("hbar"))
        .def_readwrite("G", &PhysicalConstants::G)
        .def_readwrite("c", &PhysicalConstants::c)
        .def_readwrite("hbar", &PhysicalConstants::hbar)
        .def("__repr__", [](const PhysicalConstants& p) {
            std::ostringstream os;
            os << "PhysicalConstants(G=" << p.G << ", c=" << p.c << ", hbar=" << p.hbar << ")";
            return os.str();
        });
    m.def("unit_constants", &unit_constants, "Constants with G = c = hbar = 1.");

    py::class_<CentralBody>(m, "CentralBody")
        .def(py::init<>())
        .def(py::init([](double mass, double radius, double spin_omega) {
                 return CentralBody{mass, radius, spin_omega};
             }),
             py::arg("mass"), py::arg("radius"), py::arg("spin_omega"))
        .def_readwrite("mass", &CentralBody::mass)
        .def_readwrite("radius", &CentralBody::radius)
        .def_readwrite("spin_omega", &CentralBody::spin_omega)
        .def("__repr__", [](const CentralBody& b) {
            std::ostringstream os;
            os << "CentralBody(mass=" << b.mass << ", radius=" << b.radius
               << ", spin_omega=" << b.spin_omega << ")";
            return os.str();
        });

    py::class_<DerivedBody>(m, "DerivedBody")
        .def_readonly("moment_of_inertia", &DerivedBody::moment_of_inertia)
        .def_readonly("spin_angular_momentum", &DerivedBody::spin_angular_momentum)
        .def_readonly("spin_parameter", &DerivedBody::spin_parameter);

    m.attr("UNIFORM_SPHERE_INERTIA_FACTOR") = kUniformSphereInertiaFactor;
    m.def("spin_parameter", &spin_parameter, py::arg("spin_angular_momentum"),
          py::arg("mass"), py::arg("constants"), "J / (M c^2), in seconds.");
    m.def("derive_body", &derive_body, py::arg("body"), py::arg("constants"),
          py::arg("inertia_factor") = kUniformSphereInertiaFactor,
          "Moment of inertia, spin angular momentum and spin parameter of a body.");
    m.def("keplerian_frequency", &keplerian_frequency, py::arg("mass"), py::arg("r"),
          py::arg("constants"), "Circular-orbit angular frequency sqrt(G M / r^3).");

    // --- shared report types ----------------------------------------------
    py::enum_<Method>(m, "Method")
        .value("kerr", Method::kerr)
        .value("semiclassical", Method::semiclassical)
        .value("gem", Method::gem)
        .value("oracle", Method::oracle);

    py::enum_<OrbitSense>(m, "OrbitSense")
        .value("prograde", OrbitSense::prograde)
        .value("retrograde", OrbitSense::retrograde);

    py::class_<ClockEffectReport>(m, "ClockEffectReport")
        .def_readonly("t_plus", &ClockEffectReport::t_plus)
        .def_readonly("t_minus", &ClockEffectReport::t_minus)
        .def_readonly("delta_t", &ClockEffectReport::delta_t)
        .def_readonly("method", &ClockEffectReport::method)
        .def("__repr__", &report_repr);

    // --- kerr route ---------------------------------------------------------
    py::class_<KerrFrequencies>(m, "KerrFrequencies")
        .def_readonly("w_plus", &KerrFrequencies::w_plus)
        .def_readonly("w_minus", &KerrFrequencies::w_minus)
        .def_readonly("spin_parameter", &KerrFrequencies::spin_parameter)
        .def_readonly("omega_k", &KerrFrequencies::omega_k);

    m.def("kerr_frequencies", &kerr_frequencies, py::arg("spin_parameter"),
          py::arg("omega_k"),
          "Signed co/counter-rotating circular-orbit frequencies.");
    m.def("periods_from_frequencies", &periods_from_frequencies, py::arg("frequencies"));
    m.def("clock_effect_exact", &clock_effect_exact, py::arg("spin_parameter"),
          "Closed-form period difference 4 pi a.");

    // --- semiclassical route ------------------------------------------------
    py::class_<SemiclassicalLevel>(m, "SemiclassicalLevel")
        .def(py::init([](double energy, int lz_sign) {
                 return SemiclassicalLevel{energy, lz_sign};
             }),
             py::arg("energy"), py::arg("lz_sign"))
        .def_readwrite("energy", &SemiclassicalLevel::energy)
        .def_readwrite("lz_sign", &SemiclassicalLevel::lz_sign);

    py::class_<LevelEnergies>(m, "LevelEnergies")
        .def_readonly("e_plus", &LevelEnergies::e_plus)
        .def_readonly("e_minus", &LevelEnergies::e_minus);

    py::class_<RotorState>(m, "RotorState")
        .def(py::init([](double amplitude, int m_, double energy) {
                 return RotorState{amplitude, m_, energy};
             }),
             py::arg("amplitude"), py::arg("m"), py::arg("energy"))
        .def_readwrite("amplitude", &RotorState::amplitude)
        .def_readwrite("m", &RotorState::m)
        .def_readwrite("energy", &RotorState::energy);

    m.def("level_energies", &level_energies, py::arg("spin_parameter"), py::arg("omega_k"),
          py::arg("constants"), "Level energies with 1/E = a/hbar +- 1/(hbar omega_k).");
    m.def("evaluate_state", &evaluate_state, py::arg("state"), py::arg("t"), py::arg("phi"),
          py::arg("constants"), "psi(t, phi) of the rotor state.");
    m.def("closure_period", &closure_period, py::arg("state"), py::arg("constants"),
          "Smallest T > 0 with psi(t + T, phi + 2 pi) = psi(t, phi).");
    m.def("quantum_clock_effect", &quantum_clock_effect, py::arg("spin_parameter"),
          py::arg("omega_k"), py::arg("constants"));
    m.def("bound_state_adjustment", &bound_state_adjustment, py::arg("level"));

    // --- gem route ------------------------------------------------------------
    py::class_<GemFieldSample>(m, "GemFieldSample")
        .def_readonly("magnitude", &GemFieldSample::magnitude)
        .def_readonly("direction", &GemFieldSample::direction)
        .def_readonly("r", &GemFieldSample::r);

    py::class_<LevelPair>(m, "LevelPair")
        .def_readonly("e_plus", &LevelPair::e_plus)
        .def_readonly("e_minus", &LevelPair::e_minus)
        .def_readonly("delta_e", &LevelPair::delta_e)
        .def_readonly("omega_plus", &LevelPair::omega_plus)
        .def_readonly("omega_minus", &LevelPair::omega_minus);

    py::class_<FirstOrderPeriods>(m, "FirstOrderPeriods")
        .def_readonly("report", &FirstOrderPeriods::report)
        .def_readonly("t_plus_unexpanded", &FirstOrderPeriods::t_plus_unexpanded)
        .def_readonly("t_minus_unexpanded", &FirstOrderPeriods::t_minus_unexpanded)
        .def_readonly("delta_t_unexpanded", &FirstOrderPeriods::delta_t_unexpanded)
        .def_readonly("epsilon", &FirstOrderPeriods::epsilon)
        .def_readonly("regime_warning", &FirstOrderPeriods::regime_warning);

    m.def("equatorial_field", &equatorial_field, py::arg("body"), py::arg("r"),
          py::arg("constants"), "(4/5) G R^2 M |omega| / (c^2 r^3) on the equator.");
    m.def("rewritten_field", &rewritten_field, py::arg("spin_angular_momentum"),
          py::arg("mass"), py::arg("omega_k"), py::arg("constants"),
          "2 J omega_k^2 / (M c^2), signed by J.");
    m.def("gravitomagnetic_moment", &gravitomagnetic_moment, py::arg("lz_sign"),
          py::arg("constants"), "-(1/2) lz_sign hbar.");
    m.def("potential_energy", &potential_energy, py::arg("lz_sign"),
          py::arg("spin_angular_momentum"), py::arg("mass"), py::arg("omega_k"),
          py::arg("constants"), "-mu.B for the level with the given lz sign.");
    m.def("level_pair", &level_pair, py::arg("spin_angular_momentum"), py::arg("mass"),
          py::arg("omega_k"), py::arg("constants"));
    m.def("first_order_epsilon", &first_order_epsilon, py::arg("spin_angular_momentum"),
          py::arg("mass"), py::arg("omega_k"), py::arg("constants"));
    m.def("periods_first_order", &periods_first_order, py::arg("pair"),
          py::arg("spin_angular_momentum"), py::arg("mass"), py::arg("omega_k"),
          py::arg("constants"));
    m.def("clock_effect_gem", &clock_effect_gem, py::arg("spin_angular_momentum"),
          py::arg("mass"), py::arg("constants"),
          "Closed-form period difference 4 pi J / (M c^2).");

    // --- orbit oracle ----------------------------------------------------------
    py::class_<Vec2>(m, "Vec2")
        .def(py::init<>())
        .def(py::init([](double x, double y) { return Vec2{x, y}; }), py::arg("x"),
             py::arg("y"))
        .def_readwrite("x", &Vec2::x)
        .def_readwrite("y", &Vec2::y);

    py::class_<ParticleState>(m, "ParticleState")
        .def(py::init<>())
        .def(py::init([](const Vec2& position, const Vec2& velocity, double time) {
                 return ParticleState{position, velocity, time};
             }),
             py::arg("position"), py::arg("velocity"), py::arg("time") = 0.0)
        .def_readwrite("position", &ParticleState::position)
        .def_readwrite("velocity", &ParticleState::velocity)
        .def_readwrite("time", &ParticleState::time);

    py::class_<IntegratorConfig>(m, "IntegratorConfig")
        .def(py::init<>())
        .def_readwrite("relative_tolerance", &IntegratorConfig::relative_tolerance)
        .def_readwrite("max_steps", &IntegratorConfig::max_steps)
        .def_readwrite("crossing_tolerance", &IntegratorConfig::crossing_tolerance);

    py::class_<TrajectorySample>(m, "TrajectorySample")
        .def_readonly("t", &TrajectorySample::t)
        .def_readonly("x", &TrajectorySample::x)
        .def_readonly("y", &TrajectorySample::y)
        .def_readonly("vx", &TrajectorySample::vx)
        .def_readonly("vy", &TrajectorySample::vy)
        .def_readonly("phi", &TrajectorySample::phi);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("samples", &Trajectory::samples)
        .def_readonly("mu", &Trajectory::mu)
        .def_readonly("crossing_tolerance", &Trajectory::crossing_tolerance)
        .def_readonly("steps_accepted", &Trajectory::steps_accepted)
        .def_readonly("steps_rejected", &Trajectory::steps_rejected)
        .def("to_text", [](const Trajectory& t) {
            std::ostringstream os;
            write_trajectory(os, t);
            return os.str();
        }, "Plain-text dump, one 'time x y vx vy' line per sample.");

    py::class_<PeriodMeasurement>(m, "PeriodMeasurement")
        .def_readonly("period", &PeriodMeasurement::period)
        .def_readonly("revolutions_used", &PeriodMeasurement::revolutions_used)
        .def_readonly("energy_drift", &PeriodMeasurement::energy_drift);

    py::class_<OracleMeasurement>(m, "OracleMeasurement")
        .def_readonly("report", &OracleMeasurement::report)
        .def_readonly("co_rotating", &OracleMeasurement::co_rotating)
        .def_readonly("counter_rotating", &OracleMeasurement::counter_rotating);

    m.def("acceleration", &acceleration, py::arg("state"), py::arg("body"),
          py::arg("constants"),
          "Newtonian gravity plus the gravitomagnetic velocity coupling.");
    m.def("circular_launch", &circular_launch, py::arg("r"), py::arg("sense"),
          py::arg("body"), py::arg("constants"));
    m.def("integrate_orbit", &integrate_orbit, py::arg("initial"), py::arg("body"),
          py::arg("config"), py::arg("constants"), py::arg("duration"));
    m.def("integrate_revolutions", &integrate_revolutions, py::arg("initial"),
          py::arg("body"), py::arg("config"), py::arg("constants"), py::arg("revolutions"));
    m.def("azimuthal_period", &azimuthal_period, py::arg("trajectory"));
    m.def("measure_clock_effect", &measure_clock_effect, py::arg("body"), py::arg("r"),
          py::arg("config"), py::arg("constants"),
          "Directly measured co/counter-rotating periods and their difference.");

    // --- scenarios ---------------------------------------------------------------
    py::class_<Preset>(m, "Preset")
        .def_readonly("name", &Preset::name)
        .def_readonly("body", &Preset::body)
        .def_readonly("constants", &Preset::constants);

    m.def("presets", &presets, py::return_value_policy::reference,
          "Built-in body presets.");
    m.def("find_preset", [](std::string_view name) -> std::optional<Preset> {
        const Preset* p = find_preset(name);
        if (p == nullptr) return std::nullopt;
        return *p;
    }, py::arg("name"));

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("name", &Scenario::name)
        .def_readwrite("body", &Scenario::body)
        .def_readwrite("constants", &Scenario::constants)
        .def_readwrite("radii", &Scenario::radii)
        .def_readwrite("methods", &Scenario::methods)
        .def_readwrite("integrator", &Scenario::integrator)
        .def("validate", &Scenario::validate);

    py::class_<ReportRow>(m, "ReportRow")
        .def_readonly("scenario", &ReportRow::scenario)
        .def_readonly("method", &ReportRow::method)
        .def_readonly("r", &ReportRow::r)
        .def_readonly("omega_k", &ReportRow::omega_k)
        .def_readonly("t_plus", &ReportRow::t_plus)
        .def_readonly("t_minus", &ReportRow::t_minus)
        .def_readonly("delta_t", &ReportRow::delta_t)
        .def_readonly("delta_e", &ReportRow::delta_e)
        .def_readonly("epsilon", &ReportRow::epsilon)
        .def_readonly("energy_drift", &ReportRow::energy_drift);

    py::class_<RowError>(m, "RowError")
        .def_readonly("method", &RowError::method)
        .def_readonly("r", &RowError::r)
        .def_readonly("message", &RowError::message);

    py::class_<ScenarioResult>(m, "ScenarioResult")
        .def_readonly("rows", &ScenarioResult::rows)
        .def_readonly("errors", &ScenarioResult::errors);

    m.def("load_scenario_text", [](const std::string& text, const std::string& name) {
        std::istringstream in(text);
        return load_scenario(in, name);
    }, py::arg("text"), py::arg("name") = "scenario",
          "Parse a scenario from its file content.");
    m.def("load_scenario_file", &load_scenario_file, py::arg("path"));
    m.def("run_scenario", &run_scenario, py::arg("scenario"));
    m.def("report_to_csv", [](const std::vector<ReportRow>& rows) {
        std::ostringstream os;
        emit_report(os, rows, ReportFormat::csv);
        return os.str();
    }, py::arg("rows"));
    m.def("report_to_text", [](const std::vector<ReportRow>& rows) {
        std::ostringstream os;
        emit_report(os, rows, ReportFormat::text);
        return os.str();
    }, py::arg("rows"));
    m.def("format_value", &format_value, py::arg("value"),
          "The 12-significant-digit CSV number format.");

#ifdef GMCLOCK_VERSION
#define GMCLOCK_STR2(x) #x
#define GMCLOCK_STR(x) GMCLOCK_STR2(x)
    m.attr("__version__") = GMCLOCK_STR(GMCLOCK_VERSION);
#else
    m.attr("__version__") = "dev";
#endif
}
