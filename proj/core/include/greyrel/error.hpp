#pragma once

#include <stdexcept>
#include <string>

namespace greyrel {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad labels, reversed intervals, schema violations.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but outside a formula's domain
/// (non-positive cost values, zero column sums, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The problem has no informative solution (all deviations zero,
/// zero weight denominators).
class DegenerateProblemError : public Error {
 public:
  using Error::Error;
};

}  // namespace greyrel
