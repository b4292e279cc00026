#pragma once

#include <stdexcept>
#include <string>

namespace maxties {

/// A parameter lies outside the domain an operation accepts.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A fitted parameter (alpha, beta, lambda) fell outside its open interval,
/// e.g. alpha = 0 because K_n is almost surely 1.
class DegenerateParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure could not reach its certified target.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}

  /// Best bound or error estimate reached before giving up.
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Series truncation could not certify the remainder within the iteration cap.
class TruncationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Adaptive quadrature did not converge to the requested tolerance.
class IntegrationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace maxties
