#include "gmclock/constants.hpp"

#include <cmath>

#include "gmclock/errors.hpp"

namespace gmclock {

bool PhysicalConstants::valid() const {
    return std::isfinite(G) && G > 0.0 && std::isfinite(c) && c > 0.0 &&
           std::isfinite(hbar) && hbar > 0.0;
}

PhysicalConstants unit_constants() { return {1.0, 1.0, 1.0}; }

bool CentralBody::valid() const {
    return std::isfinite(mass) && mass > 0.0 && std::isfinite(radius) &&
           radius >= 0.0 && std::isfinite(spin_omega);
}

double spin_parameter(double spin_angular_momentum, double mass,
                      const PhysicalConstants& consts) {
    return spin_angular_momentum / (mass * consts.c * consts.c);
}

DerivedBody derive_body(const CentralBody& body, const PhysicalConstants& consts,
                        double inertia_factor) {
    if (!body.valid()) {
        throw InvalidInputError("central body: mass must be positive and finite, radius non-negative");
    }
    if (!consts.valid()) {
        throw InvalidInputError("constants: G, c, hbar must be positive and finite");
    }
    if (!std::isfinite(inertia_factor) || inertia_factor <= 0.0) {
        throw InvalidInputError("inertia factor must be positive and finite");
    }
    DerivedBody out;
    out.moment_of_inertia = inertia_factor * body.mass * body.radius * body.radius;
    out.spin_angular_momentum = out.moment_of_inertia * body.spin_omega;
    out.spin_parameter = spin_parameter(out.spin_angular_momentum, body.mass, consts);
    return out;
}

double keplerian_frequency(double mass, double r, const PhysicalConstants& consts) {
    if (!std::isfinite(mass) || mass <= 0.0) {
        throw InvalidInputError("mass must be positive and finite");
    }
    if (!std::isfinite(r) || r <= 0.0) {
        throw InvalidInputError("orbit radius must be positive and finite");
    }
    if (!consts.valid()) {
        throw InvalidInputError("constants: G, c, hbar must be positive and finite");
    }
    return std::sqrt(consts.G * mass / (r * r * r));
}

}  // namespace gmclock
