#pragma once

#include <cmath>

namespace gmclock::detail {

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Used where a period difference would otherwise lose all significant
// digits to cancellation: T+ and T- can agree in their first ~11 digits at
// planetary spin parameters, while their difference is the quantity under
// test. Keeping the intermediate sums as hi/lo pairs makes the difference
// exact to well below 1e-15 relative for any spin parameter of interest.

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;
};

inline DoubleDouble two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DoubleDouble quick_two_sum(double a, double b) {
    // requires |a| >= |b|
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleDouble dd_add(const DoubleDouble& a, const DoubleDouble& b) {
    DoubleDouble s = two_sum(a.hi, b.hi);
    const DoubleDouble t = two_sum(a.lo, b.lo);
    double lo = s.lo + t.hi;
    s = quick_two_sum(s.hi, lo);
    lo = s.lo + t.lo;
    return quick_two_sum(s.hi, lo);
}

inline DoubleDouble dd_neg(const DoubleDouble& a) { return {-a.hi, -a.lo}; }

inline DoubleDouble dd_sub(const DoubleDouble& a, const DoubleDouble& b) {
    return dd_add(a, dd_neg(b));
}

inline DoubleDouble dd_mul(const DoubleDouble& a, double b) {
    const double p = a.hi * b;
    const double err = std::fma(a.hi, b, -p);
    return quick_two_sum(p, err + a.lo * b);
}

/// 1/b as a hi/lo pair (one Newton correction off the rounded quotient).
inline DoubleDouble dd_reciprocal(double b) {
    const double q = 1.0 / b;
    const double r = std::fma(-q, b, 1.0);
    return quick_two_sum(q, r / b);
}

/// a/b as a hi/lo pair.
inline DoubleDouble dd_div(double a, double b) {
    const double q = a / b;
    const double r = std::fma(-q, b, a);
    return quick_two_sum(q, r / b);
}

inline DoubleDouble dd_from(double a) { return {a, 0.0}; }

inline double dd_value(const DoubleDouble& a) { return a.hi + a.lo; }

}  // namespace gmclock::detail
