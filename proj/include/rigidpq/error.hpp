#pragma once

#include <stdexcept>
#include <string>

namespace rigidpq {

enum class ErrorKind {
  Domain,         // input outside the construction's hypotheses
  NotInvertible,  // twist matrix with non-unit determinant
  NonNodal,       // quotient singularity other than A1
  NoEigenform,    // character with zero canonical eigenspace
  Precondition,   // operation called on data it is not defined for
  CrossTerm,      // Kunneth cross term blocks rigidity propagation
  Inconsistency,  // two independent computations disagree
};

/// Hypotheses of the construction that a domain guard can reject.
enum class Hypothesis {
  None,
  Even,
  NotDivisibleBy3,
  Minimum,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  DomainError(Hypothesis violated, const std::string& what)
      : Error(ErrorKind::Domain, what), violated_(violated) {}

  Hypothesis violated() const noexcept { return violated_; }

 private:
  Hypothesis violated_;
};

[[noreturn]] inline void inconsistency(const std::string& what) {
  throw Error(ErrorKind::Inconsistency, "internal inconsistency: " + what);
}

}  // namespace rigidpq
