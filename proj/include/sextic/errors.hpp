#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sextic {

/// Input outside the domain of an operation (exit code 2 at the CLI).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A theta-constant denominator vanished: tau sits on a boundary divisor.
class DegeneratePoint : public DomainError {
 public:
  using DomainError::DomainError;
};

/// chi10 = 0, so the Igusa dictionary cannot be inverted (tau on H1).
class ProductLocusError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// 5 s2 s3 - 12 s5 = 0 in the power-sum inversion.
class InversionSingular : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Point on the vanishing divisor of chi35 where the map Phi is undefined.
class DivisorError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Vanishing orders exceed (4, 6, 12) somewhere on the base.
class NonMinimalModel : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The chosen labelling of Satake roots makes a Picard denominator vanish.
/// Callers may retry with another permutation.
class OrderingRejected : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative numeric method did not converge.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, std::vector<double> residuals)
      : std::runtime_error(what), residuals_(std::move(residuals)) {}

  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

/// Two independent computations of the same quantity disagree. Never expected
/// on valid input; exit code 3 at the CLI.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sextic
