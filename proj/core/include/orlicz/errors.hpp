#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orlicz {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid user input: config files, parameter domains, shape mismatches.
struct ConfigError : Error {
  using Error::Error;
};

/// A numeric evaluation failed: overflow guard tripped, quadrature or
/// bracket growth did not converge.
struct EvaluationError : Error {
  using Error::Error;
};

/// A solver could not establish the geometry it needs: no e-point found,
/// path collapse, minimizer pinned to the ball boundary.
struct GeometryError : Error {
  using Error::Error;
};

/// Iteration budget exhausted before reaching the requested tolerance.
/// Carries the energy trace accumulated so far.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& msg, std::vector<double> trace)
      : Error(msg), trace(std::move(trace)) {}

  std::vector<double> trace;
};

}  // namespace orlicz
