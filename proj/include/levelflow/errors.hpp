#ifndef LEVELFLOW_ERRORS_HPP
#define LEVELFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace levelflow {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise malformed argument.
struct InvalidParameterError : Error {
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
  using Error::Error;
};

/// Input violates a stated precondition (e.g. a non-Hermitian matrix
/// handed to the Hermitian solver, or a degenerate pair where a finite
/// gap is required).
struct PreconditionError : Error {
  using Error::Error;
};

/// An iterative method failed to converge; message carries diagnostics.
struct NumericalFailureError : Error {
  using Error::Error;
};

/// Matrix size outside the supported range of the general solver.
struct UnsupportedSizeError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

/// Bracketing interval does not contain the feature being refined.
struct BracketError : Error {
  using Error::Error;
};

/// Root/extremum search did not converge; message carries the iterate trace.
struct SearchFailureError : Error {
  using Error::Error;
};

/// Model file could not be parsed; message names the path and field.
struct ParseError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

}  // namespace levelflow

#endif
