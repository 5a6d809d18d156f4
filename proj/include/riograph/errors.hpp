#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riograph {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (series expressions, config files).
// Carries the byte offset of the first offending character.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// A precondition on the mathematical input was not met: series with the
// wrong constant term, insufficient truncation, vertex set out of range,
// size caps, and the like. Recoverable by fixing the input.
struct HypothesisError : Error {
    using Error::Error;
};

// Two independent computations of the same quantity disagreed. This never
// happens on correct code; it is not recoverable and callers should treat
// it as a defect in the library itself.
struct ConsistencyError : Error {
    using Error::Error;
};

}  // namespace riograph
