#pragma once

#include "gmclock/report.hpp"

namespace gmclock {

/// Signed angular frequencies of the co- and counter-rotating circular
/// equatorial orbits around a source with spin parameter a (seconds):
///     1/w_plus  = a + 1/omega_k
///     1/w_minus = a - 1/omega_k
/// w_minus is negative as long as a*omega_k < 1.
struct KerrFrequencies {
    double w_plus = 0.0;         // rad/s
    double w_minus = 0.0;        // rad/s
    double spin_parameter = 0.0; // s
    double omega_k = 0.0;        // rad/s
};

/// Width of the guard band around a*omega_k = 1 inside which the
/// counter-rotating reciprocal is numerically meaningless.
inline constexpr double kDegeneracyTolerance = 1e-12;

KerrFrequencies kerr_frequencies(double spin_parameter, double omega_k);

/// Periods 2*pi/|w| of both senses and their difference; method = kerr.
ClockEffectReport periods_from_frequencies(const KerrFrequencies& freqs);

/// Closed-form period difference 4*pi*a.
double clock_effect_exact(double spin_parameter);

}  // namespace gmclock
