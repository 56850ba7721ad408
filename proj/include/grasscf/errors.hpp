#pragma once

#include <stdexcept>
#include <string>

namespace grasscf {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract input: bad dimensions, zero vectors, parse
// failures. CLI maps this to exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Objects whose dimensions must agree do not.
class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A zero Pluecker coordinate where the procedure requires all entries
// non-zero (the caller should route to dimension reduction instead).
class ZeroCoordinateError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Input fails the Grassmann-Pluecker relations. CLI exit code 3.
class NonDecomposableError : public Error {
public:
    using Error::Error;
};

// A certified invariant failed mid-run. Indicates a bug; the message carries
// the serialized offending state. CLI exit code 4.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace grasscf
