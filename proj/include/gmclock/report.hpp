#pragma once

#include <string_view>

namespace gmclock {

/// Route that produced a clock-effect number.
enum class Method { kerr, semiclassical, gem, oracle };

std::string_view method_name(Method m);

/// Parses "kerr", "semiclassical", "gem" or "oracle"; throws
/// InvalidInputError otherwise.
Method method_from_name(std::string_view name);

/// Orbit sense with respect to the +z axis. Co-rotation with the source is
/// prograde while the source spin is non-negative.
enum class OrbitSense { prograde, retrograde };

/// Co- and counter-rotating periods and their difference.
///
/// t_plus and t_minus are the individually rounded periods; delta_t is
/// evaluated on a cancellation-free path where one exists, so it is more
/// accurate than the literal difference of the stored periods whenever
/// t_plus and t_minus agree in many leading digits.
struct ClockEffectReport {
    double t_plus = 0.0;   // s
    double t_minus = 0.0;  // s
    double delta_t = 0.0;  // s
    Method method = Method::kerr;
};

}  // namespace gmclock
