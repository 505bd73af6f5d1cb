#pragma once

#include <stdexcept>
#include <string>

namespace gmclock {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A numeric argument violated its domain (non-finite, wrong sign, ...).
class InvalidInputError : public Error {
  public:
    using Error::Error;
};

/// a*omega_k = 1: the counter-rotating frequency diverges.
class DegenerateOrbitError : public Error {
  public:
    using Error::Error;
};

/// Parameters left the regime in which the formula or orbit exists.
class RegimeError : public Error {
  public:
    using Error::Error;
};

/// A zero-energy rotor state never closes in time.
class NoClosureError : public Error {
  public:
    using Error::Error;
};

/// Field evaluation at or below the source radius.
class InsideSourceError : public Error {
  public:
    using Error::Error;
};

/// Integration exceeded the configured step budget.
class StepBudgetError : public Error {
  public:
    using Error::Error;
};

/// Trajectory too short for the requested measurement.
class NeedsMoreDataError : public Error {
  public:
    using Error::Error;
};

/// Malformed scenario file; carries the 1-based line number.
class ParseError : public Error {
  public:
    ParseError(const std::string& message, int line)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    [[nodiscard]] int line() const { return line_; }

  private:
    int line_;
};

/// Structurally valid scenario that violates an invariant; the message
/// names the invariant.
class ValidationError : public Error {
  public:
    using Error::Error;
};

}  // namespace gmclock
