#pragma once

#include <stdexcept>

namespace glogis {

/// Invalid argument values (bad grids, non-positive curve parameters, ...).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Evaluation requested at (or within tolerance of) a pole.
struct PoleError : DomainError {
  using DomainError::DomainError;
};

/// An iterative scheme hit its cap before reaching the requested tolerance.
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace glogis
