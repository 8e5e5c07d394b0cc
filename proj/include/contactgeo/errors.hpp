#pragma once

#include <stdexcept>
#include <string>

namespace contactgeo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grid cannot represent the requested band limit.
struct ResolutionError : Error {
    using Error::Error;
};

// Operation not defined for this backend (or backend mismatch).
struct BackendError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct NotAnEigenpairError : Error {
    using Error::Error;
};

struct NonMonotoneError : Error {
    using Error::Error;
};

struct StepSizeError : Error {
    using Error::Error;
};

}  // namespace contactgeo
