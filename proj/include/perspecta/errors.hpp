#pragma once

#include <stdexcept>
#include <string>

namespace perspecta {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-square input or incompatible dimensions between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A spectrum landed outside the domain of the requested scalar function,
/// or an input left the positive definite cone. Carries the offending
/// eigenvalue so callers can report it.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double offending_eigenvalue)
      : Error(what), offending_eigenvalue_(offending_eigenvalue) {}

  double offending_eigenvalue() const noexcept { return offending_eigenvalue_; }

 private:
  double offending_eigenvalue_;
};

/// Numeric failure: eigensolver non-convergence, condition cap exceeded,
/// non-finite values produced.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix files, unknown function ids, invalid configuration.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A two-argument matrix map handed to the scalar-reconstruction routine
/// produced a non-scalar output on (1, t*1); it is not unitarily covariant.
class NonScalarError : public Error {
 public:
  using Error::Error;
};

}  // namespace perspecta
