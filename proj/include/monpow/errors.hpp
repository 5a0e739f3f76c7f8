#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monpow {

/// Operands have incompatible lengths / ambient variable counts.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operation applied outside its mathematical domain (zero ideal, unit ideal, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Componentwise division requested for a non-divisor.
struct ExactDivisionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Text input rejected; `position` is the 1-based offset of the offending character.
struct ParseError : std::runtime_error {
    std::size_t position;

    ParseError(const std::string& message, std::size_t pos)
        : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

} // namespace monpow
