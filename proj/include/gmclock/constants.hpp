#pragma once

namespace gmclock {

/// Physical constants in SI units. Defaults are CODATA 2018 (c and hbar are
/// exact in the 2019 SI redefinition; G is the recommended value). All three
/// may be overridden, e.g. for unit-scaled toy systems.
struct PhysicalConstants {
    double G = 6.674300000e-11;     // gravitational constant, m^3 kg^-1 s^-2
    double c = 2.997924580e8;       // speed of light in vacuum, m s^-1
    double hbar = 1.054571817e-34;  // reduced Planck constant, J s

    [[nodiscard]] bool valid() const;
};

/// G = c = hbar = 1.
PhysicalConstants unit_constants();

/// Uniformly dense spinning ball. The spin axis is +z; the sign of
/// spin_omega sets the rotation sense.
struct CentralBody {
    double mass = 0.0;        // kg
    double radius = 0.0;      // m
    double spin_omega = 0.0;  // rad/s, signed

    [[nodiscard]] bool valid() const;
};

/// Quantities derived from a CentralBody. spin_parameter = J/(M c^2)
/// carries units of seconds and is signed like spin_omega.
struct DerivedBody {
    double moment_of_inertia = 0.0;      // kg m^2
    double spin_angular_momentum = 0.0;  // kg m^2 s^-1
    double spin_parameter = 0.0;         // s
};

/// Moment-of-inertia coefficient of a uniform-density sphere (I = 2/5 M R^2).
inline constexpr double kUniformSphereInertiaFactor = 0.4;

/// J/(M c^2) in seconds.
double spin_parameter(double spin_angular_momentum, double mass,
                      const PhysicalConstants& consts);

/// Computes I, J and the spin parameter for a body. inertia_factor replaces
/// the uniform-sphere 2/5 when modelling bodies with a different mass
/// distribution (e.g. 0.3307 for the real Earth).
DerivedBody derive_body(const CentralBody& body, const PhysicalConstants& consts,
                        double inertia_factor = kUniformSphereInertiaFactor);

/// Circular-orbit angular frequency sqrt(G M / r^3).
double keplerian_frequency(double mass, double r, const PhysicalConstants& consts);

}  // namespace gmclock
