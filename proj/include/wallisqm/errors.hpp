#pragma once

#include <stdexcept>
#include <string>

namespace wallisqm {

/// Argument outside an operation's mathematical domain (gamma pole,
/// non-positive radicand, invalid series parameters, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An integral or expectation value that does not exist for the requested
/// combination (e.g. <r^2> for the l = 0 Lorentz trial function).
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Iterative procedure ran out of budget. Carries the last estimate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace wallisqm
