#pragma once

#include <stdexcept>

namespace thetadiv {

// Malformed data handed to the library: unknown vertex ids, out-of-range
// edge indices, orientations that do not match their graph, parse failures.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A stated precondition of an operation does not hold (wrong total degree,
// disconnected graph, non-semistable input to a reduction, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Inequality-based checks clear the denominator 2g-2 and need genus >= 2.
class UnsupportedGenusError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// An exhaustive scan would exceed its configured bound. Never downgraded to
// silent sampling.
class ResourceError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Text input that cannot be parsed; the message carries the location.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

}  // namespace thetadiv
