#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gmclock/constants.hpp"
#include "gmclock/errors.hpp"
#include "gmclock/orbit.hpp"
#include "support.hpp"

using namespace gmclock;

namespace {

constexpr double kPi = std::numbers::pi;
const PhysicalConstants kUnit = unit_constants();

// Unit-scale test body (G = c = M = R = 1) whose spin is chosen so that the
// expansion parameter J omega_k / (M c^2) at the given radius equals eps.
CentralBody scaled_body(double eps, double r) {
    const double omega_k = std::pow(r, -1.5);
    const double j = eps / omega_k;
    return {1.0, 1.0, j / kUniformSphereInertiaFactor};
}

double field_strength(const CentralBody& body, double r) {
    const DerivedBody d = derive_body(body, kUnit);
    return 2.0 * d.spin_angular_momentum / (r * r * r);  // G = c = 1
}

IntegratorConfig tight_config() {
    IntegratorConfig config;
    config.relative_tolerance = 1e-12;
    config.crossing_tolerance = 1e-10;
    return config;
}

}  // namespace

TEST_CASE("acceleration is Newtonian for a non-rotating source") {
    const CentralBody body{1.0, 1.0, 0.0};
    const ParticleState state{{3.0, 4.0}, {0.1, -0.2}, 0.0};
    const Vec2 a = acceleration(state, body, kUnit);
    const double r = 5.0;
    CHECK(testkit::rel_diff(a.x, -3.0 / (r * r * r)) < 1e-15);
    CHECK(testkit::rel_diff(a.y, -4.0 / (r * r * r)) < 1e-15);
}

TEST_CASE("acceleration at rest points radially inward") {
    const CentralBody body = scaled_body(1e-3, 10.0);
    const ParticleState state{{6.0, 8.0}, {0.0, 0.0}, 0.0};
    const Vec2 a = acceleration(state, body, kUnit);
    // Parallel to -r with no tangential component.
    CHECK(testkit::rel_diff(a.x * 8.0, a.y * 6.0) < 1e-14);
    CHECK(a.x < 0.0);
    CHECK(a.y < 0.0);
}

TEST_CASE("acceleration rejects points inside the source") {
    const CentralBody body{1.0, 2.0, 0.1};
    const ParticleState state{{1.0, 0.0}, {0.0, 0.5}, 0.0};
    CHECK_THROWS_AS((void)acceleration(state, body, kUnit), InsideSourceError);
}

TEST_CASE("circular launch solves the signed balance exactly") {
    const double r = 10.0;
    const CentralBody body = scaled_body(1e-3, r);
    const double omega_k_sq = 1.0 / (r * r * r);
    const double bg = field_strength(body, r);

    for (const OrbitSense sense : {OrbitSense::prograde, OrbitSense::retrograde}) {
        const ParticleState s = circular_launch(r, sense, body, kUnit);
        CHECK(s.position.x == r);
        CHECK(s.position.y == 0.0);
        const double omega = s.velocity.y / r;
        const double residual = omega * omega + bg * omega - omega_k_sq;
        CHECK(std::abs(residual) / omega_k_sq < 1e-14);
        CHECK((sense == OrbitSense::prograde ? omega > 0.0 : omega < 0.0));
    }

    // First-order root omega_k - bg/2; the next expansion term is
    // bg^2/(8 omega_k) = (eps^2/2) omega_k.
    const double omega_plus = circular_launch(r, OrbitSense::prograde, body, kUnit).velocity.y / r;
    const double omega_k = std::sqrt(omega_k_sq);
    CHECK(std::abs(omega_plus - (omega_k - 0.5 * bg)) / omega_k < 1e-3 * 1e-3);
}

TEST_CASE("circular launch reduces to the Keplerian speed without spin") {
    const CentralBody body{1.0, 1.0, 0.0};
    const ParticleState s = circular_launch(25.0, OrbitSense::prograde, body, kUnit);
    CHECK(testkit::rel_diff(s.velocity.y, std::sqrt(1.0 / 25.0)) < 1e-15);
}

TEST_CASE("prograde and retrograde launch speeds differ by the field coupling") {
    const double r = 10.0;
    const CentralBody body = scaled_body(1e-3, r);
    const double bg = field_strength(body, r);
    const double v_kepler = std::sqrt(1.0 / r);

    const double v_pro = circular_launch(r, OrbitSense::prograde, body, kUnit).velocity.y;
    const double v_retro = -circular_launch(r, OrbitSense::retrograde, body, kUnit).velocity.y;

    // Each sense sits bg*r/2 away from Keplerian, up to the eps^2/2 term of
    // the root expansion.
    const double half_split = 0.5 * bg * r;
    CHECK(std::abs((v_kepler - v_pro) - half_split) / v_kepler < 1e-3 * 1e-3);
    CHECK(std::abs((v_retro - v_kepler) - half_split) / v_kepler < 1e-3 * 1e-3);
}

TEST_CASE("circular launch rejects radii inside the source") {
    const CentralBody body{1.0, 2.0, 0.0};
    CHECK_THROWS_AS((void)circular_launch(1.5, OrbitSense::prograde, body, kUnit),
                    InsideSourceError);
}

TEST_CASE("launch stays circular to 1e-9 r over a revolution") {
    const double r = 10.0;
    const CentralBody body = scaled_body(1e-3, r);
    const ParticleState s = circular_launch(r, OrbitSense::prograde, body, kUnit);
    const Trajectory traj = integrate_revolutions(s, body, tight_config(), kUnit, 1.0);
    double worst = 0.0;
    for (const TrajectorySample& sample : traj.samples) {
        worst = std::max(worst, std::abs(std::hypot(sample.x, sample.y) - r));
    }
    CHECK(worst < 1e-9 * r);
}

TEST_CASE("Newtonian orbit closes after one revolution") {
    const double r = 10.0;
    const CentralBody body{1.0, 1.0, 0.0};
    const ParticleState s = circular_launch(r, OrbitSense::prograde, body, kUnit);
    const double period = 2.0 * kPi * std::pow(r, 1.5);
    const Trajectory traj = integrate_orbit(s, body, tight_config(), kUnit, period);
    const TrajectorySample& last = traj.samples.back();
    CHECK(last.t == doctest::Approx(period).epsilon(1e-12));
    const double miss = std::hypot(last.x - s.position.x, last.y - s.position.y);
    CHECK(miss < 1e-8 * r);
}

TEST_CASE("velocity reversal retraces a Newtonian arc") {
    const double r = 10.0;
    const CentralBody body{1.0, 1.0, 0.0};
    const ParticleState s = circular_launch(r, OrbitSense::prograde, body, kUnit);
    const Trajectory out = integrate_orbit(s, body, tight_config(), kUnit, 50.0);
    const TrajectorySample& end = out.samples.back();

    const ParticleState back{{end.x, end.y}, {-end.vx, -end.vy}, 0.0};
    const Trajectory ret = integrate_orbit(back, body, tight_config(), kUnit, 50.0);
    const TrajectorySample& home = ret.samples.back();
    CHECK(std::hypot(home.x - s.position.x, home.y - s.position.y) < 1e-8 * r);
    CHECK(std::hypot(home.vx + s.velocity.x, home.vy + s.velocity.y) < 1e-8 * norm(s.velocity));
}

TEST_CASE("velocity reversal with a spin flip retraces the coupled arc") {
    // The velocity coupling breaks plain reversal; flipping the source spin
    // restores it.
    const double r = 10.0;
    const CentralBody body = scaled_body(1e-3, r);
    CentralBody mirrored = body;
    mirrored.spin_omega = -body.spin_omega;

    const ParticleState s = circular_launch(r, OrbitSense::prograde, body, kUnit);
    const Trajectory out = integrate_orbit(s, body, tight_config(), kUnit, 50.0);
    const TrajectorySample& end = out.samples.back();

    const ParticleState back{{end.x, end.y}, {-end.vx, -end.vy}, 0.0};
    const Trajectory ret = integrate_orbit(back, mirrored, tight_config(), kUnit, 50.0);
    const TrajectorySample& home = ret.samples.back();
    CHECK(std::hypot(home.x - s.position.x, home.y - s.position.y) < 1e-8 * r);
}

TEST_CASE("Newtonian energy drift stays below 1e-8 over 100 revolutions") {
    const double r = 10.0;
    const CentralBody body = scaled_body(1e-4, r);
    const ParticleState s = circular_launch(r, OrbitSense::prograde, body, kUnit);
    const Trajectory traj = integrate_revolutions(s, body, tight_config(), kUnit, 100.0);
    const PeriodMeasurement m = azimuthal_period(traj);
    CHECK(m.revolutions_used == 100);
    CHECK(m.energy_drift < 1e-8);
}

TEST_CASE("integration is deterministic, bit for bit") {
    const double r = 7.5;
    const CentralBody body = scaled_body(1e-3, r);
    const ParticleState s = circular_launch(r, OrbitSense::retrograde, body, kUnit);
    const Trajectory a = integrate_revolutions(s, body, tight_config(), kUnit, 2.0);
    const Trajectory b = integrate_revolutions(s, body, tight_config(), kUnit, 2.0);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].t == b.samples[i].t);
        CHECK(a.samples[i].x == b.samples[i].x);
        CHECK(a.samples[i].y == b.samples[i].y);
        CHECK(a.samples[i].vx == b.samples[i].vx);
        CHECK(a.samples[i].vy == b.samples[i].vy);
        CHECK(a.samples[i].phi == b.samples[i].phi);
    }
}

TEST_CASE("step budget and config validation") {
    const double r = 10.0;
    const CentralBody body = scaled_body(1e-3, r);
    const ParticleState s = circular_launch(r, OrbitSense::prograde, body, kUnit);

    IntegratorConfig starved = tight_config();
    starved.max_steps = 10;
    CHECK_THROWS_AS((void)integrate_revolutions(s, body, starved, kUnit, 1.0), StepBudgetError);

    IntegratorConfig loose = tight_config();
    loose.relative_tolerance = 1e-3;  // above the 1e-6 ceiling
    CHECK_THROWS_AS((void)integrate_orbit(s, body, loose, kUnit, 1.0), InvalidInputError);

    IntegratorConfig zero_tol = tight_config();
    zero_tol.relative_tolerance = 0.0;
    CHECK_THROWS_AS((void)integrate_orbit(s, body, zero_tol, kUnit, 1.0), InvalidInputError);

    CHECK_THROWS_AS((void)integrate_orbit(s, body, tight_config(), kUnit, -1.0),
                    InvalidInputError);
}

TEST_CASE("plunging trajectory propagates the inside-source error") {
    const CentralBody body{1.0, 1.0, 0.0};
    const ParticleState drop{{3.0, 0.0}, {0.0, 0.0}, 0.0};
    CHECK_THROWS_AS((void)integrate_orbit(drop, body, tight_config(), kUnit, 1e4),
                    InsideSourceError);
}

TEST_CASE("azimuthal period of a Kepler orbit") {
    const double r = 10.0;
    const CentralBody body{1.0, 1.0, 0.0};
    const ParticleState s = circular_launch(r, OrbitSense::prograde, body, kUnit);
    const Trajectory traj = integrate_revolutions(s, body, tight_config(), kUnit, 3.0);
    const PeriodMeasurement m = azimuthal_period(traj);
    CHECK(m.revolutions_used == 3);
    CHECK(testkit::rel_diff(m.period, 2.0 * kPi * std::pow(r, 1.5)) < 1e-9);
}

TEST_CASE("azimuthal period of a synthetic circular trajectory") {
    const double omega = 0.01;
    const double r = 5.0;
    Trajectory traj;
    traj.mu = 1.0;
    traj.crossing_tolerance = 1e-10;
    for (int i = 0; i <= 240; ++i) {
        const double t = 3.0 * i;
        const double phi = omega * t;
        traj.samples.push_back({t, r * std::cos(phi), r * std::sin(phi),
                                -r * omega * std::sin(phi), r * omega * std::cos(phi),
                                phi});
    }
    const PeriodMeasurement m = azimuthal_period(traj);
    CHECK(m.revolutions_used == 1);
    CHECK(testkit::rel_diff(m.period, 2.0 * kPi / omega) < 1e-12);
    CHECK(m.energy_drift == 0.0);
}

TEST_CASE("azimuthal period needs at least one revolution") {
    const double r = 10.0;
    const CentralBody body{1.0, 1.0, 0.0};
    const ParticleState s = circular_launch(r, OrbitSense::prograde, body, kUnit);
    const Trajectory traj = integrate_revolutions(s, body, tight_config(), kUnit, 0.4);
    CHECK_THROWS_AS((void)azimuthal_period(traj), NeedsMoreDataError);

    Trajectory empty;
    CHECK_THROWS_AS((void)azimuthal_period(empty), NeedsMoreDataError);
}

TEST_CASE("co-rotating orbits take longer than counter-rotating ones") {
    const double r = 10.0;
    const CentralBody body = scaled_body(1e-3, r);
    const OracleMeasurement m = measure_clock_effect(body, r, tight_config(), kUnit);
    CHECK(m.report.t_plus > m.report.t_minus);
    CHECK(m.report.method == Method::oracle);
    CHECK(m.co_rotating.revolutions_used == 5);
}

TEST_CASE("no rotation, no clock effect") {
    const double r = 10.0;
    const CentralBody body{1.0, 1.0, 0.0};
    const OracleMeasurement m = measure_clock_effect(body, r, tight_config(), kUnit);
    const double period_scale = 2.0 * kPi * std::pow(r, 1.5);
    CHECK(std::abs(m.report.delta_t) < 1e-9 * period_scale);
}

TEST_CASE("measured clock effect matches the closed form at eps = 1e-4") {
    const double r = 10.0;
    const CentralBody body = scaled_body(1e-4, r);
    const DerivedBody derived = derive_body(body, kUnit);
    const double expected = 4.0 * kPi * derived.spin_angular_momentum;
    const OracleMeasurement m = measure_clock_effect(body, r, tight_config(), kUnit);
    CHECK(std::abs(m.report.delta_t - expected) / expected < 1e-2);
}

TEST_CASE("measured clock effect is radius independent") {
    const CentralBody body = scaled_body(1e-4, 10.0);
    const DerivedBody derived = derive_body(body, kUnit);
    const double expected = 4.0 * kPi * derived.spin_angular_momentum;
    const OracleMeasurement near = measure_clock_effect(body, 10.0, tight_config(), kUnit);
    const OracleMeasurement far = measure_clock_effect(body, 100.0, tight_config(), kUnit);
    CHECK(std::abs(near.report.delta_t - expected) / expected < 1e-2);
    CHECK(std::abs(far.report.delta_t - expected) / expected < 1e-2);
}

TEST_CASE("negative source spin swaps the sense labels, not the sign") {
    const double r = 10.0;
    CentralBody body = scaled_body(1e-3, r);
    body.spin_omega = -body.spin_omega;
    const OracleMeasurement m = measure_clock_effect(body, r, tight_config(), kUnit);
    // t_plus is the co-rotating period, so the difference stays positive.
    CHECK(m.report.delta_t > 0.0);
}

TEST_CASE("oracle deviation shrinks as the tolerance tightens") {
    const double r = 10.0;
    const CentralBody body = scaled_body(1e-4, r);
    const DerivedBody derived = derive_body(body, kUnit);
    const double expected = 4.0 * kPi * derived.spin_angular_momentum;

    const auto deviation = [&](double rtol) {
        IntegratorConfig config = tight_config();
        config.relative_tolerance = rtol;
        const OracleMeasurement m = measure_clock_effect(body, r, config, kUnit);
        return std::abs(m.report.delta_t - expected) / expected;
    };

    const double coarse = deviation(1e-6);
    const double medium = deviation(1e-9);
    const double fine = deviation(1e-12);
    CHECK(coarse > medium);
    CHECK(medium > fine);
}

TEST_CASE("trajectory dump is a five-column table") {
    const double r = 10.0;
    const CentralBody body{1.0, 1.0, 0.0};
    const ParticleState s = circular_launch(r, OrbitSense::prograde, body, kUnit);
    const Trajectory traj = integrate_orbit(s, body, tight_config(), kUnit, 10.0);

    std::ostringstream out;
    write_trajectory(out, traj);
    std::istringstream in(out.str());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        double t, x, y, vx, vy;
        REQUIRE((fields >> t >> x >> y >> vx >> vy));
        std::string extra;
        CHECK_FALSE((fields >> extra));
        if (lines == 0) {
            CHECK(x == r);
            CHECK(t == 0.0);
        }
        ++lines;
    }
    CHECK(lines == traj.samples.size());
}
