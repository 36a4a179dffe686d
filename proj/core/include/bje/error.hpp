#pragma once

#include <stdexcept>
#include <string>

namespace bje {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain where a formula or model is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma-function (or Gamma-ratio) evaluated at a nonpositive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative method ran out of its iteration budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The hypergeometric evaluator has no well-conditioned expansion for the
/// requested argument. Callers fall back to continued fractions.
class UnsupportedRegion : public Error {
 public:
  using Error::Error;
};

}  // namespace bje
