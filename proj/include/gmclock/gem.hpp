#pragma once

#include "gmclock/constants.hpp"
#include "gmclock/report.hpp"

namespace gmclock {

/// Gravitomagnetic field of a spinning uniform ball, sampled on the
/// equatorial plane at radius r.
struct GemFieldSample {
    double magnitude = 0.0;  // 1/s
    int direction = +1;      // sign along +z
    double r = 0.0;          // m
};

/// (4/5) G R^2 M |omega| / (c^2 r^3), directed along sign(omega) z.
GemFieldSample equatorial_field(const CentralBody& body, double r,
                                const PhysicalConstants& consts);

/// The same field through the spin angular momentum and the local Keplerian
/// frequency: 2 J omega_k^2 / (M c^2). Signed by J.
double rewritten_field(double spin_angular_momentum, double mass, double omega_k,
                       const PhysicalConstants& consts);

/// Effective gravitomagnetic moment (z-component) of an orbiting spin-zero
/// test mass: -(1/2) lz_sign hbar.
double gravitomagnetic_moment(int lz_sign, const PhysicalConstants& consts);

/// Coupling energy -mu_z B_z of the level with the given lz sign. Composed
/// from gravitomagnetic_moment and rewritten_field; the closed form
/// lz_sign * hbar omega_k^2 J / (M c^2) is an invariant, not the
/// implementation.
double potential_energy(int lz_sign, double spin_angular_momentum, double mass,
                        double omega_k, const PhysicalConstants& consts);

/// Keplerian level split in two by the gravitomagnetic coupling:
///   E(+-)     = -hbar (omega_k -+ omega_k^2 J / (M c^2))
///   omega(+-) = omega_k -+ omega_k^2 J / (M c^2)
struct LevelPair {
    double e_plus = 0.0;       // J
    double e_minus = 0.0;      // J
    double delta_e = 0.0;      // J, 2 hbar omega_k^2 J/(M c^2)
    double omega_plus = 0.0;   // rad/s
    double omega_minus = 0.0;  // rad/s
};

LevelPair level_pair(double spin_angular_momentum, double mass, double omega_k,
                     const PhysicalConstants& consts);

/// Expansion parameter J omega_k / (M c^2) of the first-order period forms.
double first_order_epsilon(double spin_angular_momentum, double mass,
                           double omega_k, const PhysicalConstants& consts);

/// Above this epsilon the expanded periods are flagged as untrustworthy
/// (quadratic truncation error beyond ~1e-4 relative).
inline constexpr double kEpsilonWarnThreshold = 1e-2;

/// First-order periods 2*pi/omega_k +- 2*pi*J/(M c^2) next to the
/// unexpanded 2*pi/omega(-+) ones, so the truncation stays measurable.
struct FirstOrderPeriods {
    ClockEffectReport report;         // expanded forms; method = gem
    double t_plus_unexpanded = 0.0;   // 2*pi/omega_plus
    double t_minus_unexpanded = 0.0;  // 2*pi/omega_minus
    double delta_t_unexpanded = 0.0;
    double epsilon = 0.0;
    bool regime_warning = false;      // epsilon > kEpsilonWarnThreshold
};

FirstOrderPeriods periods_first_order(const LevelPair& pair,
                                      double spin_angular_momentum, double mass,
                                      double omega_k, const PhysicalConstants& consts);

/// Closed-form period difference 4*pi*J/(M c^2); independent of radius and
/// of omega_k.
double clock_effect_gem(double spin_angular_momentum, double mass,
                        const PhysicalConstants& consts);

}  // namespace gmclock
