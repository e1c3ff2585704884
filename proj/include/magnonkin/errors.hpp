#pragma once

#include <stdexcept>
#include <string>

namespace magnonkin {

// Base for everything the library throws on purpose. kind() is a stable
// machine-readable tag used by the CLI error report.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

// A precondition on an input value was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "InvalidArgument"; }
};

// Base for failures of the numerics proper (exit code 3 in the CLI).
class NumericalError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "NumericalError"; }
};

// Bose-Einstein occupation evaluated at the pole omega = 0, T > 0.
class DivergentOccupation : public NumericalError {
public:
    using NumericalError::NumericalError;
    const char* kind() const noexcept override { return "DivergentOccupation"; }
};

class QuadratureNonConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
    const char* kind() const noexcept override { return "QuadratureNonConvergence"; }
};

// Population reached the top of a truncated Fock ladder.
class TruncationLeak : public NumericalError {
public:
    using NumericalError::NumericalError;
    const char* kind() const noexcept override { return "TruncationLeak"; }
};

class DegenerateNormalization : public NumericalError {
public:
    using NumericalError::NumericalError;
    const char* kind() const noexcept override { return "DegenerateNormalization"; }
};

class SizeBudgetExceeded : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "SizeBudgetExceeded"; }
};

// A file could not be read or written (exit code 4 in the CLI).
class IoError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "IoError"; }
};

}  // namespace magnonkin
