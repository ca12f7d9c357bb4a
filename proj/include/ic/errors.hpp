#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ic {

/// Caller supplied something outside an operation's domain.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input; offset is the byte position of the first bad byte.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : InputError(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// The request is well formed but beyond what the implementation supports
/// (canonical forms above 10 vertices, subset oracle above 24, ...).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ic
