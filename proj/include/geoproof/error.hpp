#pragma once

#include <stdexcept>
#include <string>

namespace geoproof {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arithmetic domain violations (division by zero, zero polynomial where
/// a nonzero one is required, ...).
struct math_error : error {
    using error::error;
};

/// Text could not be parsed; `pos` is a 0-based byte offset into the input.
struct parse_error : error {
    std::size_t pos;
    parse_error(const std::string& what, std::size_t pos_)
        : error(what + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
};

/// Operands belong to different variable universes.
struct universe_error : error {
    using error::error;
};

/// A name used in a polynomial or predicate is not declared in the
/// variable universe.
struct unknown_variable_error : error {
    std::string name;
    explicit unknown_variable_error(const std::string& n)
        : error("unknown variable '" + n + "'"), name(n) {}
};

/// A computation exceeded its configured time budget.
struct budget_exceeded : error {
    using error::error;
};

}  // namespace geoproof
