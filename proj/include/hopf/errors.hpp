#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopf {

// Invalid input: malformed permutation, degree mismatch, tag mismatch, ...
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation would enumerate a symmetric group beyond the configured bound.
class DegreeGuardError : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public DomainError {
public:
    ParseError(const std::string& message, std::size_t position)
        : DomainError(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Two routes that must agree did not; signals a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hopf
