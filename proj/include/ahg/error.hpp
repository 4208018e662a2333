#pragma once

#include <stdexcept>
#include <string>

namespace ahg {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument shape or malformed input (dimension mismatch, bad format).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed (Re PD violated, b = 0, complex Θ for WVD, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Matrix is numerically singular.
class SingularError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative method did not converge, or a quadrature envelope does not decay.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A combinatorial term count exceeded its guard.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace ahg
