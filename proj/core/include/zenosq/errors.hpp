#pragma once

#include <stdexcept>
#include <string>

namespace zenosq {

// Base of every error raised by the library. kind() is a stable identifier
// used in machine-readable diagnostics.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

// Parameters outside the model's valid domain (e.g. drive at or past threshold).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainError"; }
};

// Lookup outside a tabulated range.
class RangeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "RangeError"; }
};

// Operation not defined for the given spectral-density variant.
class VariantError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "VariantError"; }
};

// Malformed input text (tables, configuration).
class FormatError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "FormatError"; }
};

class DimensionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DimensionError"; }
};

// Quadrature tail bound did not fall below tolerance within the lobe budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ConvergenceError"; }
};

// State norm drifted past the integrator's hard limit.
class NormDriftError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NormDriftError"; }
};

}  // namespace zenosq
