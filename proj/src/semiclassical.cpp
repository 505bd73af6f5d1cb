#include "gmclock/semiclassical.hpp"

#include <cmath>
#include <numbers>

#include "gmclock/detail/compensated.hpp"
#include "gmclock/errors.hpp"
#include "gmclock/kerr.hpp"

namespace gmclock {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_consts(const PhysicalConstants& consts) {
    if (!consts.valid()) {
        throw InvalidInputError("constants: G, c, hbar must be positive and finite");
    }
}

void check_state(const RotorState& state) {
    if (!std::isfinite(state.amplitude) || state.amplitude <= 0.0) {
        throw InvalidInputError("rotor amplitude must be positive and finite");
    }
    if (state.m != 1 && state.m != -1) {
        throw InvalidInputError("azimuthal quantum number must be +1 or -1");
    }
    if (!std::isfinite(state.energy)) {
        throw InvalidInputError("rotor energy must be finite");
    }
}
}  // namespace

LevelEnergies level_energies(double spin_parameter, double omega_k,
                             const PhysicalConstants& consts) {
    check_consts(consts);
    const KerrFrequencies freqs = kerr_frequencies(spin_parameter, omega_k);
    return {consts.hbar * freqs.w_plus, consts.hbar * freqs.w_minus};
}

std::complex<double> evaluate_state(const RotorState& state, double t, double phi,
                                    const PhysicalConstants& consts) {
    check_consts(consts);
    check_state(state);
    const double phase = static_cast<double>(state.m) * phi - state.energy * t / consts.hbar;
    return std::polar(state.amplitude, phase);
}

double closure_period(const RotorState& state, const PhysicalConstants& consts) {
    check_consts(consts);
    check_state(state);
    if (state.energy == 0.0) {
        throw NoClosureError("zero-energy state has no finite closure period");
    }

    // Closure under (t, phi) -> (t + T, phi + 2*pi) requires the total phase
    // change 2*pi*m - E*T/hbar to be a multiple of 2*pi, i.e.
    // T = 2*pi*hbar*k/E for integer k (m is an integer, so it drops out of
    // the winding count). The smallest positive member of that family is
    // the one with k = sign(E).
    const int winding = state.energy > 0.0 ? 1 : -1;
    return kTwoPi * consts.hbar * static_cast<double>(winding) / state.energy;
}

ClockEffectReport quantum_clock_effect(double spin_parameter, double omega_k,
                                       const PhysicalConstants& consts) {
    const LevelEnergies levels = level_energies(spin_parameter, omega_k, consts);
    const RotorState co{1.0, +1, levels.e_plus};
    const RotorState counter{1.0, -1, levels.e_minus};

    ClockEffectReport report;
    report.t_plus = closure_period(co, consts);
    report.t_minus = closure_period(counter, consts);
    report.method = Method::semiclassical;

    // Same cancellation hazard as the frequency route: the reciprocal
    // energies are (a +- 1/omega_k)/hbar and their difference collapses to
    // 2a/hbar. Evaluate it in double-double instead of differencing the
    // rounded periods.
    using detail::DoubleDouble;
    const DoubleDouble inv_e_plus =
        detail::dd_add(detail::dd_div(spin_parameter, consts.hbar),
                       detail::dd_reciprocal(consts.hbar * omega_k));
    const DoubleDouble inv_e_minus =
        detail::dd_sub(detail::dd_div(spin_parameter, consts.hbar),
                       detail::dd_reciprocal(consts.hbar * omega_k));
    // T+ = 2*pi*hbar/E+, T- = -2*pi*hbar/E-: delta is 2*pi*hbar*(1/E+ + 1/E-).
    const DoubleDouble sum = detail::dd_add(inv_e_plus, inv_e_minus);
    report.delta_t = detail::dd_value(detail::dd_mul(detail::dd_mul(sum, consts.hbar), kTwoPi));
    return report;
}

SemiclassicalLevel bound_state_adjustment(const SemiclassicalLevel& level) {
    if (level.lz_sign != 1 && level.lz_sign != -1) {
        throw InvalidInputError("lz sign must be +1 or -1");
    }
    if (level.lz_sign == +1) {
        return {-level.energy, level.lz_sign};
    }
    return level;
}

}  // namespace gmclock
