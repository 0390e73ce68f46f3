#pragma once

#include <stdexcept>
#include <string>

namespace singosc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Special function evaluated at a pole of its parameter domain.
struct PoleError : Error {
    using Error::Error;
};

// Parameter set violates a documented admissibility constraint.
struct ValidationError : Error {
    using Error::Error;
};

// A function required to be strictly one-signed changed sign.
struct NodelessError : ValidationError {
    using ValidationError::ValidationError;
};

// Iterative evaluation failed to reach the requested accuracy.
struct ConvergenceError : Error {
    using Error::Error;
};

// A quantity left the range representable in double precision.
struct DivergenceError : Error {
    using Error::Error;
};

} // namespace singosc
