#pragma once

#include <stdexcept>
#include <string>

namespace robinlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data violates a documented precondition or type invariant.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed to produce an admissible answer
/// (bracket exhaustion, iteration cap, loss of positivity, ...).
class SolverFailure : public Error {
public:
    using Error::Error;
};

/// Malformed or out-of-range experiment configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace robinlab
