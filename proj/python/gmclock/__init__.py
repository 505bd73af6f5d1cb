"""Gravitomagnetic clock effect toolkit.

Exact Kerr circular-orbit periods, semiclassical rotor closure, GEM
level splitting, and a numerical orbit oracle, all sharing one set of
body/constants types. See the project README for the scenario file
format and the command-line front end.
"""

from gmclock._core import (  # noqa: F401
    CentralBody,
    ClockEffectReport,
    DegenerateOrbitError,
    DerivedBody,
    FirstOrderPeriods,
    GemFieldSample,
    InsideSourceError,
    IntegratorConfig,
    InvalidInputError,
    KerrFrequencies,
    LevelEnergies,
    LevelPair,
    Method,
    NeedsMoreDataError,
    NoClosureError,
    OracleMeasurement,
    OrbitSense,
    ParticleState,
    PeriodMeasurement,
    PhysicalConstants,
    Preset,
    RegimeError,
    ReportRow,
    RotorState,
    RowError,
    Scenario,
    ScenarioParseError,
    ScenarioResult,
    ScenarioValidationError,
    SemiclassicalLevel,
    StepBudgetError,
    Trajectory,
    TrajectorySample,
    UNIFORM_SPHERE_INERTIA_FACTOR,
    Vec2,
    __version__,
    acceleration,
    azimuthal_period,
    bound_state_adjustment,
    circular_launch,
    clock_effect_exact,
    clock_effect_gem,
    closure_period,
    derive_body,
    equatorial_field,
    evaluate_state,
    find_preset,
    first_order_epsilon,
    format_value,
    gravitomagnetic_moment,
    integrate_orbit,
    integrate_revolutions,
    keplerian_frequency,
    kerr_frequencies,
    level_energies,
    level_pair,
    load_scenario_file,
    load_scenario_text,
    measure_clock_effect,
    periods_first_order,
    periods_from_frequencies,
    potential_energy,
    presets,
    quantum_clock_effect,
    report_to_csv,
    report_to_text,
    rewritten_field,
    run_scenario,
    spin_parameter,
    unit_constants,
)
