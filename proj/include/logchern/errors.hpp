#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared by every logchern module.
 *
 * All failures are reported with exceptions. Callers that need to map
 * failures to exit codes (the CLI) catch `logchern::Error` and inspect the
 * concrete type.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logchern {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is a 0-based byte offset.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

/// Operands live in incompatible ambient spaces (variable count, P^n).
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A zero-dimensional ideal was required.
struct NotZeroDimensional : Error {
    using Error::Error;
};

/// Input curve rejected by divisor validation.
struct ValidationError : Error {
    enum class Kind { NotHomogeneous, Degenerate, NonIsolated, ChartRetriesExhausted };
    ValidationError(Kind kind, const std::string& what) : Error(what), kind(kind) {}
    Kind kind;
};

/// Truncated jet dimensions did not stabilize before the order cap.
struct StabilizationError : Error {
    using Error::Error;
};

/// Codimension outside the range with a known closed form.
struct UnsupportedCodimension : Error {
    using Error::Error;
};

}  // namespace logchern
