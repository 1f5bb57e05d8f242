#pragma once
#include <stdexcept>
#include <string>

namespace vertexlab {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Point or path left the chart/surface domain (y<=0 in the half-plane, profile
// interval exceeded, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

// Curve speed fell below the regularity floor.
class RegularityError : public Error {
  public:
    using Error::Error;
};

// Sample grid too coarse to separate features; caller should resample.
class ResolutionError : public Error {
  public:
    using Error::Error;
};

// Curve meets (or comes too close to) the pole of a map or projection.
class PoleError : public Error {
  public:
    using Error::Error;
};

// Invalid construction parameters (vanishing denominator, bad radius, ...).
class ParameterError : public Error {
  public:
    using Error::Error;
};

// Rejection sampling budget exhausted.
class GenerationError : public Error {
  public:
    using Error::Error;
};

// A geodesic left the domain before reaching the requested length; carries the
// arclength at which it exited.
class EscapeError : public Error {
  public:
    EscapeError(const std::string& msg, double exit_param)
        : Error(msg), exit_param_(exit_param) {}
    double exit_param() const { return exit_param_; }

  private:
    double exit_param_;
};

}  // namespace vertexlab
