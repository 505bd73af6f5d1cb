#pragma once

#include <complex>

#include "gmclock/constants.hpp"
#include "gmclock/report.hpp"

namespace gmclock {

/// One orbital level: energy paired with the sign of the z angular momentum
/// component (lz_sign = +1 for L_z = +hbar, -1 for L_z = -hbar).
struct SemiclassicalLevel {
    double energy = 0.0;  // J
    int lz_sign = +1;
};

struct LevelEnergies {
    double e_plus = 0.0;   // J, L_z = +hbar level
    double e_minus = 0.0;  // J, L_z = -hbar level
};

/// Level energies satisfying 1/E(+-) = a/hbar +- 1/(hbar*omega_k). These are
/// hbar times the co/counter-rotating orbit frequencies; the implementation
/// goes through kerr_frequencies so the correspondence is bit-exact.
LevelEnergies level_energies(double spin_parameter, double omega_k,
                             const PhysicalConstants& consts);

/// Plane-rotor eigenstate psi(t, phi) = A exp(i m phi) exp(-i E t / hbar).
struct RotorState {
    double amplitude = 1.0;  // |A| > 0
    int m = +1;              // azimuthal quantum number, +1 or -1
    double energy = 0.0;     // J
};

std::complex<double> evaluate_state(const RotorState& state, double t, double phi,
                                    const PhysicalConstants& consts);

/// Smallest T > 0 with psi(t + T, phi + 2*pi) = psi(t, phi) for all t, phi.
/// Solved from the closure phase condition by integer winding bookkeeping,
/// not from a per-level closed form.
double closure_period(const RotorState& state, const PhysicalConstants& consts);

/// Builds both rotor states, extracts their closure periods and reports the
/// period difference; method = semiclassical.
ClockEffectReport quantum_clock_effect(double spin_parameter, double omega_k,
                                       const PhysicalConstants& consts);

/// Maps the positive-energy (L_z = +hbar) level onto the bound-state sign
/// convention by negating its energy; the L_z = -hbar level is already a
/// bound-state form and passes through unchanged.
SemiclassicalLevel bound_state_adjustment(const SemiclassicalLevel& level);

}  // namespace gmclock
