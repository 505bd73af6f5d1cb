#include "gmclock/orbit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <type_traits>

#include "gmclock/errors.hpp"

namespace gmclock {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Cap on the azimuth swept per accepted step. Keeps the per-sample phase
// increments far from the pi unwrapping limit regardless of tolerance.
constexpr double kMaxPhasePerStep = 0.25 * std::numbers::pi;

struct State4 {
    // x, y, vx, vy
    std::array<double, 4> v{};
};

struct ForceField {
    double mu = 0.0;       // G*M
    double b_coeff = 0.0;  // 2*G*J/c^2, so B_g(r) = b_coeff/r^3
    double body_radius = 0.0;
};

ForceField make_field(const CentralBody& body, const PhysicalConstants& consts) {
    const DerivedBody derived = derive_body(body, consts);
    ForceField field;
    field.mu = consts.G * body.mass;
    field.b_coeff = 2.0 * consts.G * derived.spin_angular_momentum / (consts.c * consts.c);
    field.body_radius = body.radius;
    return field;
}

State4 rhs(const ForceField& field, const State4& s) {
    const double x = s.v[0];
    const double y = s.v[1];
    const double vx = s.v[2];
    const double vy = s.v[3];
    const double r2 = x * x + y * y;
    const double r = std::sqrt(r2);
    if (r <= field.body_radius) {
        throw InsideSourceError("trajectory reached the source radius: field formula invalid there");
    }
    const double inv_r3 = 1.0 / (r2 * r);
    const double bg = field.b_coeff * inv_r3;
    State4 out;
    out.v[0] = vx;
    out.v[1] = vy;
    out.v[2] = -field.mu * x * inv_r3 + vy * bg;
    out.v[3] = -field.mu * y * inv_r3 - vx * bg;
    return out;
}

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5.0;
constexpr double A31 = 3.0 / 40.0, A32 = 9.0 / 40.0;
constexpr double A41 = 44.0 / 45.0, A42 = -56.0 / 15.0, A43 = 32.0 / 9.0;
constexpr double A51 = 19372.0 / 6561.0, A52 = -25360.0 / 2187.0,
                 A53 = 64448.0 / 6561.0, A54 = -212.0 / 729.0;
constexpr double A61 = 9017.0 / 3168.0, A62 = -355.0 / 33.0, A63 = 46732.0 / 5247.0,
                 A64 = 49.0 / 176.0, A65 = -5103.0 / 18656.0;
constexpr double B1 = 35.0 / 384.0, B3 = 500.0 / 1113.0, B4 = 125.0 / 192.0,
                 B5 = -2187.0 / 6784.0, B6 = 11.0 / 84.0;
// b - b*: weights of the embedded 4th-order error estimate.
constexpr double E1 = 71.0 / 57600.0, E3 = -71.0 / 16695.0, E4 = 71.0 / 1920.0,
                 E5 = -17253.0 / 339200.0, E6 = 22.0 / 525.0, E7 = -1.0 / 40.0;

State4 axpy(const State4& base, double h, const State4& k) {
    State4 out;
    for (int i = 0; i < 4; ++i) out.v[i] = base.v[i] + h * k.v[i];
    return out;
}

double wrap_to_pi(double angle) {
    // remainder() lands in [-pi, pi] without a branch cut.
    return std::remainder(angle, kTwoPi);
}

double instantaneous_rate(const State4& s) {
    const double r2 = s.v[0] * s.v[0] + s.v[1] * s.v[1];
    return (s.v[0] * s.v[3] - s.v[1] * s.v[2]) / r2;
}

struct StopByTime {
    double t_end;
};
struct StopByRevolutions {
    double target_phi;  // accumulated |azimuth| at which to stop
};

template <typename Stop>
Trajectory integrate(const ParticleState& initial, const CentralBody& body,
                     const IntegratorConfig& config, const PhysicalConstants& consts,
                     const Stop& stop) {
    if (!config.valid()) {
        throw InvalidInputError("integrator config: relative_tolerance in (0, 1e-6], "
                                "max_steps > 0, crossing_tolerance > 0");
    }
    if (!consts.valid()) {
        throw InvalidInputError("constants: G, c, hbar must be positive and finite");
    }
    const double r0 = std::hypot(initial.position.x, initial.position.y);
    if (!(r0 > 0.0) || !std::isfinite(r0)) {
        throw InvalidInputError("initial position must be finite and away from the origin");
    }

    const ForceField field = make_field(body, consts);
    const double rtol = config.relative_tolerance;

    Trajectory traj;
    traj.mu = field.mu;
    traj.crossing_tolerance = config.crossing_tolerance;

    State4 y{{initial.position.x, initial.position.y, initial.velocity.x,
              initial.velocity.y}};
    double t = initial.time;
    double phi = std::atan2(y.v[1], y.v[0]);
    const double phi0 = phi;

    // Error scales: positions against the launch radius, velocities against
    // the launch speed (or the local circular speed when launched at rest).
    const double v0 = std::max(std::hypot(initial.velocity.x, initial.velocity.y),
                               std::sqrt(field.mu / r0));
    const std::array<double, 4> scale{r0, r0, v0, v0};

    const auto error_norm = [&](const State4& err, const State4& a, const State4& b) {
        double sum = 0.0;
        for (int i = 0; i < 4; ++i) {
            const double sc = rtol * (scale[i] + std::max(std::abs(a.v[i]), std::abs(b.v[i])));
            const double e = err.v[i] / sc;
            sum += e * e;
        }
        return std::sqrt(0.25 * sum);
    };

    const auto max_step = [&](const State4& s) {
        const double rate = std::abs(instantaneous_rate(s));
        return rate > 0.0 ? kMaxPhasePerStep / rate
                          : std::numeric_limits<double>::infinity();
    };

    traj.samples.push_back({t, y.v[0], y.v[1], y.v[2], y.v[3], phi});

    State4 k1 = rhs(field, y);

    // Initial step: a small fraction of the revolution time (or of the
    // free-fall time for non-revolving launches); the controller takes over
    // from there.
    const double rate0 = std::abs(instantaneous_rate(y));
    const double char_time = rate0 > 0.0 ? kTwoPi / rate0
                                         : kTwoPi * std::sqrt(r0 * r0 * r0 / field.mu);
    double h = 1e-2 * char_time;
    if constexpr (std::is_same_v<Stop, StopByTime>) {
        h = std::min(h, stop.t_end - t);
        if (!(h > 0.0) || !std::isfinite(h)) {
            throw InvalidInputError("integration span must be positive");
        }
    }

    std::size_t steps = 0;
    while (true) {
        if constexpr (std::is_same_v<Stop, StopByTime>) {
            const double remaining = stop.t_end - t;
            if (remaining <= 0.0) break;
            h = std::min(h, remaining);
        } else {
            if (std::abs(phi - phi0) >= stop.target_phi) break;
        }
        if (++steps > config.max_steps) {
            throw StepBudgetError("integration exceeded max_steps");
        }

        const State4 k2 = rhs(field, axpy(y, h * A21, k1));
        State4 stage;
        for (int i = 0; i < 4; ++i)
            stage.v[i] = y.v[i] + h * (A31 * k1.v[i] + A32 * k2.v[i]);
        const State4 k3 = rhs(field, stage);
        for (int i = 0; i < 4; ++i)
            stage.v[i] = y.v[i] + h * (A41 * k1.v[i] + A42 * k2.v[i] + A43 * k3.v[i]);
        const State4 k4 = rhs(field, stage);
        for (int i = 0; i < 4; ++i)
            stage.v[i] = y.v[i] + h * (A51 * k1.v[i] + A52 * k2.v[i] + A53 * k3.v[i] +
                                       A54 * k4.v[i]);
        const State4 k5 = rhs(field, stage);
        for (int i = 0; i < 4; ++i)
            stage.v[i] = y.v[i] + h * (A61 * k1.v[i] + A62 * k2.v[i] + A63 * k3.v[i] +
                                       A64 * k4.v[i] + A65 * k5.v[i]);
        const State4 k6 = rhs(field, stage);
        State4 y_new;
        for (int i = 0; i < 4; ++i)
            y_new.v[i] = y.v[i] + h * (B1 * k1.v[i] + B3 * k3.v[i] + B4 * k4.v[i] +
                                       B5 * k5.v[i] + B6 * k6.v[i]);
        const State4 k7 = rhs(field, y_new);

        State4 err;
        for (int i = 0; i < 4; ++i)
            err.v[i] = h * (E1 * k1.v[i] + E3 * k3.v[i] + E4 * k4.v[i] + E5 * k5.v[i] +
                            E6 * k6.v[i] + E7 * k7.v[i]);

        const double norm = error_norm(err, y, y_new);
        if (norm <= 1.0) {
            const double dphi = wrap_to_pi(std::atan2(y_new.v[1], y_new.v[0]) -
                                           std::atan2(y.v[1], y.v[0]));
            t += h;
            y = y_new;
            k1 = k7;  // FSAL
            phi += dphi;
            traj.samples.push_back({t, y.v[0], y.v[1], y.v[2], y.v[3], phi});
            traj.steps_accepted++;
        } else {
            traj.steps_rejected++;
        }

        const double factor =
            std::clamp(0.9 * std::pow(std::max(norm, 1e-30), -0.2), 0.2, 5.0);
        h = std::min(h * factor, max_step(y));
        if (!(h > 0.0) || !std::isfinite(h)) {
            throw RegimeError("step size collapsed: dynamics not integrable here");
        }
    }

    return traj;
}

double sample_phase_rate(const TrajectorySample& s) {
    const double r2 = s.x * s.x + s.y * s.y;
    return (s.x * s.vy - s.y * s.vx) / r2;
}

double newtonian_energy(const TrajectorySample& s, double mu) {
    return 0.5 * (s.vx * s.vx + s.vy * s.vy) - mu / std::hypot(s.x, s.y);
}

// Cubic Hermite value of phi(t) on [s0.t, s1.t].
double hermite_phi(const TrajectorySample& s0, const TrajectorySample& s1, double t) {
    const double dt = s1.t - s0.t;
    const double u = (t - s0.t) / dt;
    const double u2 = u * u;
    const double u3 = u2 * u;
    const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
    const double h10 = u3 - 2.0 * u2 + u;
    const double h01 = -2.0 * u3 + 3.0 * u2;
    const double h11 = u3 - u2;
    return h00 * s0.phi + h10 * dt * sample_phase_rate(s0) + h01 * s1.phi +
           h11 * dt * sample_phase_rate(s1);
}

// Bisects phi(t) = target inside [s0.t, s1.t] down to the time tolerance.
double refine_crossing(const TrajectorySample& s0, const TrajectorySample& s1,
                       double target, double tol) {
    const double g_hi = s1.phi - target;
    if (g_hi == 0.0) return s1.t;
    double lo = s0.t;
    double hi = s1.t;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = hermite_phi(s0, s1, mid) - target;
        if (g_mid == 0.0) return mid;
        if ((g_mid > 0.0) == (g_hi > 0.0)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

bool IntegratorConfig::valid() const {
    return std::isfinite(relative_tolerance) && relative_tolerance > 0.0 &&
           relative_tolerance <= 1e-6 && max_steps > 0 &&
           std::isfinite(crossing_tolerance) && crossing_tolerance > 0.0;
}

Vec2 acceleration(const ParticleState& state, const CentralBody& body,
                  const PhysicalConstants& consts) {
    if (!consts.valid()) {
        throw InvalidInputError("constants: G, c, hbar must be positive and finite");
    }
    const ForceField field = make_field(body, consts);
    const State4 s{{state.position.x, state.position.y, state.velocity.x,
                    state.velocity.y}};
    const State4 d = rhs(field, s);
    return {d.v[2], d.v[3]};
}

ParticleState circular_launch(double r, OrbitSense sense, const CentralBody& body,
                              const PhysicalConstants& consts) {
    if (!consts.valid()) {
        throw InvalidInputError("constants: G, c, hbar must be positive and finite");
    }
    if (!std::isfinite(r) || r <= 0.0 || r <= body.radius) {
        throw InsideSourceError("launch radius must lie outside the source");
    }
    const ForceField field = make_field(body, consts);
    const double inv_r3 = 1.0 / (r * r * r);
    const double omega_k_sq = field.mu * inv_r3;
    const double bg = field.b_coeff * inv_r3;

    // Signed circular balance: omega^2 + bg*omega - omega_k^2 = 0.
    const double disc = std::sqrt(bg * bg + 4.0 * omega_k_sq);
    const double omega = sense == OrbitSense::prograde ? 0.5 * (-bg + disc)
                                                       : -0.5 * (bg + disc);
    if (!std::isfinite(omega) || omega == 0.0) {
        throw RegimeError("no circular-orbit root at this radius");
    }

    ParticleState state;
    state.position = {r, 0.0};
    state.velocity = {0.0, omega * r};
    state.time = 0.0;
    return state;
}

Trajectory integrate_orbit(const ParticleState& initial, const CentralBody& body,
                           const IntegratorConfig& config, const PhysicalConstants& consts,
                           double duration) {
    if (!std::isfinite(duration) || duration <= 0.0) {
        throw InvalidInputError("integration duration must be positive");
    }
    return integrate(initial, body, config, consts, StopByTime{initial.time + duration});
}

Trajectory integrate_revolutions(const ParticleState& initial, const CentralBody& body,
                                 const IntegratorConfig& config, const PhysicalConstants& consts,
                                 double revolutions) {
    if (!std::isfinite(revolutions) || revolutions <= 0.0) {
        throw InvalidInputError("revolution count must be positive");
    }
    return integrate(initial, body, config, consts, StopByRevolutions{kTwoPi * revolutions});
}

PeriodMeasurement azimuthal_period(const Trajectory& trajectory) {
    if (trajectory.samples.size() < 2) {
        throw NeedsMoreDataError("trajectory has fewer than two samples");
    }
    const TrajectorySample& first = trajectory.samples.front();
    const TrajectorySample& last = trajectory.samples.back();
    const double total = last.phi - first.phi;
    const auto revolutions = static_cast<std::size_t>(std::floor(std::abs(total) / kTwoPi));
    if (revolutions < 1) {
        throw NeedsMoreDataError("trajectory spans less than one full revolution");
    }

    const double sign = total > 0.0 ? 1.0 : -1.0;
    const double target = first.phi + sign * kTwoPi * static_cast<double>(revolutions);

    // First sample at or past the target azimuth; its predecessor brackets
    // the crossing.
    std::size_t idx = 1;
    while (idx < trajectory.samples.size() &&
           sign * (trajectory.samples[idx].phi - target) < 0.0) {
        ++idx;
    }
    if (idx == trajectory.samples.size()) {
        throw NeedsMoreDataError("revolution crossing not bracketed by the samples");
    }

    const double tol = trajectory.crossing_tolerance > 0.0 ? trajectory.crossing_tolerance : 1e-9;
    const double t_cross = refine_crossing(trajectory.samples[idx - 1],
                                           trajectory.samples[idx], target, tol);

    PeriodMeasurement out;
    out.period = (t_cross - first.t) / static_cast<double>(revolutions);
    out.revolutions_used = revolutions;
    const double e0 = newtonian_energy(first, trajectory.mu);
    const double e1 = newtonian_energy(last, trajectory.mu);
    out.energy_drift = e0 != 0.0 ? std::abs(e1 - e0) / std::abs(e0) : std::abs(e1 - e0);
    return out;
}

OracleMeasurement measure_clock_effect(const CentralBody& body, double r,
                                       const IntegratorConfig& config,
                                       const PhysicalConstants& consts) {
    const DerivedBody derived = derive_body(body, consts);
    const OrbitSense co_sense = derived.spin_angular_momentum < 0.0
                                    ? OrbitSense::retrograde
                                    : OrbitSense::prograde;
    const OrbitSense counter_sense = co_sense == OrbitSense::prograde
                                         ? OrbitSense::retrograde
                                         : OrbitSense::prograde;

    const ParticleState launch_co = circular_launch(r, co_sense, body, consts);
    const ParticleState launch_counter = circular_launch(r, counter_sense, body, consts);

    OracleMeasurement out;
    out.co_rotating = azimuthal_period(
        integrate_revolutions(launch_co, body, config, consts, kOracleRevolutions));
    out.counter_rotating = azimuthal_period(
        integrate_revolutions(launch_counter, body, config, consts, kOracleRevolutions));

    out.report.t_plus = out.co_rotating.period;
    out.report.t_minus = out.counter_rotating.period;
    out.report.delta_t = out.report.t_plus - out.report.t_minus;
    out.report.method = Method::oracle;
    return out;
}

void write_trajectory(std::ostream& out, const Trajectory& trajectory) {
    char line[192];
    for (const TrajectorySample& s : trajectory.samples) {
        std::snprintf(line, sizeof line, "%.17g %.17g %.17g %.17g %.17g\n", s.t, s.x,
                      s.y, s.vx, s.vy);
        out << line;
    }
}

}  // namespace gmclock
