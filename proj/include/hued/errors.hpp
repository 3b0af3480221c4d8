#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hued {

// Caller supplied something the operation cannot accept (bad index, wrong
// residue class, size mismatch, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed graph/JSON text. offset is the byte position where parsing failed.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A proven invariant failed at runtime. Always an implementation bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace hued
