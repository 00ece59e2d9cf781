#pragma once

#include <stdexcept>
#include <string>

namespace hyperform {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mathematically invalid input (reducible curve, not hyperelliptic, ...).
/// Maps to CLI exit code 1.
struct math_reject : error {
    using error::error;
};

/// Malformed expression or usage. Maps to CLI exit code 2.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg), position(pos) {}
    std::size_t position;
};

/// An internal invariant failed (precision exhaustion, bad state).
/// Maps to CLI exit code 3.
struct internal_error : error {
    using error::error;
};

} // namespace hyperform
