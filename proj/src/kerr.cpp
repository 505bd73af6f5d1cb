#include "gmclock/kerr.hpp"

#include <cmath>
#include <numbers>

#include "gmclock/detail/compensated.hpp"
#include "gmclock/errors.hpp"

namespace gmclock {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

KerrFrequencies kerr_frequencies(double spin_parameter, double omega_k) {
    if (!std::isfinite(omega_k) || omega_k <= 0.0) {
        throw InvalidInputError("omega_k must be positive and finite");
    }
    if (!std::isfinite(spin_parameter) || spin_parameter < 0.0) {
        throw InvalidInputError("spin parameter must be non-negative and finite");
    }
    const double product = spin_parameter * omega_k;
    if (std::abs(1.0 - product) < kDegeneracyTolerance) {
        throw DegenerateOrbitError("a*omega_k = 1: counter-rotating frequency diverges");
    }
    if (product > 1.0) {
        throw RegimeError("a*omega_k > 1: counter-rotating circular orbit does not exist "
                          "in this parametrization");
    }

    const double inv_omega_k = 1.0 / omega_k;
    KerrFrequencies out;
    out.w_plus = 1.0 / (spin_parameter + inv_omega_k);
    out.w_minus = 1.0 / (spin_parameter - inv_omega_k);
    out.spin_parameter = spin_parameter;
    out.omega_k = omega_k;
    return out;
}

ClockEffectReport periods_from_frequencies(const KerrFrequencies& freqs) {
    if (freqs.w_plus == 0.0 || freqs.w_minus == 0.0 || !std::isfinite(freqs.w_plus) ||
        !std::isfinite(freqs.w_minus)) {
        throw InvalidInputError("frequencies must be non-zero and finite");
    }
    if (!std::isfinite(freqs.omega_k) || freqs.omega_k <= 0.0) {
        throw InvalidInputError("omega_k must be positive and finite");
    }

    ClockEffectReport report;
    report.t_plus = kTwoPi / std::abs(freqs.w_plus);
    report.t_minus = kTwoPi / std::abs(freqs.w_minus);
    report.method = Method::kerr;

    // The reciprocal periods are |a +- 1/omega_k|; their difference
    // collapses to 2a. Differencing the rounded t_plus/t_minus directly
    // would lose one digit per decade of 1/(a*omega_k), so the subtraction
    // runs in double-double where the shared 1/omega_k term cancels
    // exactly.
    using detail::DoubleDouble;
    const DoubleDouble inv_wk = detail::dd_reciprocal(freqs.omega_k);
    const DoubleDouble a = detail::dd_from(freqs.spin_parameter);
    DoubleDouble plus = detail::dd_add(a, inv_wk);
    DoubleDouble minus = detail::dd_sub(a, inv_wk);
    if (detail::dd_value(plus) < 0.0) plus = detail::dd_neg(plus);
    if (detail::dd_value(minus) < 0.0) minus = detail::dd_neg(minus);
    report.delta_t = detail::dd_value(detail::dd_mul(detail::dd_sub(plus, minus), kTwoPi));
    return report;
}

double clock_effect_exact(double spin_parameter) {
    if (!std::isfinite(spin_parameter) || spin_parameter < 0.0) {
        throw InvalidInputError("spin parameter must be non-negative and finite");
    }
    return 4.0 * std::numbers::pi * spin_parameter;
}

}  // namespace gmclock
