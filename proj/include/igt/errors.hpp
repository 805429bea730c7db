#pragma once

#include <stdexcept>
#include <string>

namespace igt {

/// Base class for all toolkit errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input; `position` is a 0-based offset into the input.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// An enumeration or search exceeded its configured bound.
struct cap_exceeded : error {
    using error::error;
};

/// Caller violated a documented precondition.
struct precondition_error : error {
    using error::error;
};

/// An internal invariant failed; indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

} // namespace igt
