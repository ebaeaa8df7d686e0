#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypercol {

/// Malformed input text. `line()` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what)
        , line_(line)
    {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An operation was called on input that breaks its stated precondition
/// (wrong uniformity, invalid precoloring, s > r-1, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine refused to run because the instance is above its work cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hypercol
