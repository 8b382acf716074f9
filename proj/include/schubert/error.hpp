#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad type strings, non-reduced words where a reduced word is
// required, unparsable expressions, mismatched root systems.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// A division that the caller promised to be exact left a remainder.
struct DivisionError : Error {
    explicit DivisionError(const std::string& msg) : Error(msg) {}
};

// A configurable resource cap (element count, group order) was exceeded.
struct CapacityError : Error {
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

}  // namespace schubert
