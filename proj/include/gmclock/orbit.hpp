#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "gmclock/constants.hpp"
#include "gmclock/report.hpp"

namespace gmclock {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
double norm(Vec2 v);

/// Planar test-particle state in the source's equatorial plane.
struct ParticleState {
    Vec2 position;   // m
    Vec2 velocity;   // m/s
    double time = 0.0;  // s
};

struct IntegratorConfig {
    double relative_tolerance = 1e-12;  // local error control, in (0, 1e-6]
    std::size_t max_steps = 10'000'000;
    double crossing_tolerance = 1e-9;   // s, period-event refinement

    [[nodiscard]] bool valid() const;
};

struct TrajectorySample {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double vx = 0.0;
    double vy = 0.0;
    double phi = 0.0;  // continuously unwrapped azimuth, rad
};

/// Time-ordered integrator output. mu and crossing_tolerance are carried
/// along so period extraction and energy diagnostics need no extra inputs.
struct Trajectory {
    std::vector<TrajectorySample> samples;
    double mu = 0.0;                 // G*M of the generating body
    double crossing_tolerance = 0.0; // s
    std::size_t steps_accepted = 0;
    std::size_t steps_rejected = 0;
};

struct PeriodMeasurement {
    double period = 0.0;             // s
    std::size_t revolutions_used = 0;
    double energy_drift = 0.0;       // relative drift of the Newtonian energy
};

/// Newtonian gravity plus the gravitomagnetic velocity coupling:
///   a = -G M rhat / r^2 + v x B_g(r) zhat,   B_g(r) = 2 G J / (c^2 r^3).
/// The sign of the velocity term is pinned by the circular-orbit balance
/// omega^2 + omega B_g - omega_k^2 = 0, whose roots reproduce the
/// first-order frequencies omega_k -+ G J/(c^2 r^3) of the level pair.
Vec2 acceleration(const ParticleState& state, const CentralBody& body,
                  const PhysicalConstants& consts);

/// State on the +x axis with the tangential speed solving the circular
/// balance exactly for the requested sense.
ParticleState circular_launch(double r, OrbitSense sense, const CentralBody& body,
                              const PhysicalConstants& consts);

/// Adaptive Dormand-Prince 5(4) propagation for a fixed time span.
Trajectory integrate_orbit(const ParticleState& initial, const CentralBody& body,
                           const IntegratorConfig& config, const PhysicalConstants& consts,
                           double duration);

/// Propagates until the accumulated azimuth reaches the requested number of
/// revolutions (in either sense).
Trajectory integrate_revolutions(const ParticleState& initial, const CentralBody& body,
                                 const IntegratorConfig& config, const PhysicalConstants& consts,
                                 double revolutions);

/// Mean time per full 2*pi of accumulated azimuth, averaged over all whole
/// revolutions in the trajectory; crossing times are interpolated to the
/// trajectory's crossing tolerance.
PeriodMeasurement azimuthal_period(const Trajectory& trajectory);

/// Direct numerical measurement of the clock effect at radius r: integrates
/// a co-rotating and a counter-rotating circular orbit and differences the
/// measured azimuthal periods. t_plus is the co-rotating period.
struct OracleMeasurement {
    ClockEffectReport report;  // method = oracle
    PeriodMeasurement co_rotating;
    PeriodMeasurement counter_rotating;
};

OracleMeasurement measure_clock_effect(const CentralBody& body, double r,
                                       const IntegratorConfig& config,
                                       const PhysicalConstants& consts);

/// Revolutions integrated per sense by measure_clock_effect.
inline constexpr double kOracleRevolutions = 5.0;

/// Plain-text dump: one "time x y vx vy" line per sample.
void write_trajectory(std::ostream& out, const Trajectory& trajectory);

}  // namespace gmclock
