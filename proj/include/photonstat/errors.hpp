#pragma once

#include <stdexcept>
#include <string>

namespace photonstat {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters, malformed files, violated invariants.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Operation not applicable to this input (wrong stack mode, missing data channel).
class CapabilityError : public Error {
public:
  using Error::Error;
};

/// Data-dependent failure: zero counts, empty calibration group, featureless frame.
class InsufficientDataError : public Error {
public:
  using Error::Error;
};

/// Numerical fit did not converge or is degenerate.
class FitError : public Error {
public:
  using Error::Error;
};

/// Truncated or size-inconsistent file.
class CorruptionError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

}  // namespace photonstat
