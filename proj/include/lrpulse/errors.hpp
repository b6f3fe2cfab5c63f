#pragma once

#include <stdexcept>
#include <string>

namespace lrpulse {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad inputs: rejected parameters, malformed configs. CLI exit code 1.
struct ValidationError : Error {
    using Error::Error;
};

// Failures of the numerics themselves. CLI exit code 2.
struct NumericalError : Error {
    using Error::Error;
};

struct NormalizationError : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidEpsilon : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidDelta : ValidationError {
    using ValidationError::ValidationError;
};

struct ConfigError : ValidationError {
    using ValidationError::ValidationError;
};

// Both Rabi frequencies zero: the mixing angle is undefined there.
struct DegeneratePulse : NumericalError {
    using NumericalError::NumericalError;
};

// gamma(t) too close to 0 or pi for pulse synthesis (cot gamma blows up).
struct SingularAngle : NumericalError {
    using NumericalError::NumericalError;
};

struct QuadratureFailure : NumericalError {
    using NumericalError::NumericalError;
};

struct StepSizeError : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace lrpulse
