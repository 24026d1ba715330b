#pragma once

#include <stdexcept>
#include <string>

namespace mvop {

/// Raised when a parameter set or a (w, r) label violates a documented constraint.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot deliver a result within its tolerance.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public NumericError {
 public:
  SingularMatrixError(const std::string& what, double condition_estimate)
      : NumericError(what), condition_estimate_(condition_estimate) {}

  /// Reciprocal of the estimated 1-norm condition number (0 means exactly singular).
  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

}  // namespace mvop
