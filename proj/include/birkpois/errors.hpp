#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bp {

enum class ErrorKind {
  SingularInput,
  NotUnimodular,
  StratumAmbiguous,
  NotPositiveDefinite,
  NotTraceless,
  InvalidTangent,
  SymmetryViolation,
  OnDegeneracyLocus,
  DimensionGuard,
  TrivialTorus,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Raised when an input lies outside the numerical domain of an operation
/// (singular, on a stratum boundary, off a required subspace, ...).
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bp
