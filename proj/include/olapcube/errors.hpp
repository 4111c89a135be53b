#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace olapcube {

// Input violates an operation contract: unknown dimension, bad arity,
// invalid identifier, and the like.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A 64-bit unsigned result would wrap. Counts never wrap silently.
class ArithmeticOverflow : public std::runtime_error {
public:
    explicit ArithmeticOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input. position() is the 1-based column where known, 0 otherwise.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at column " + std::to_string(position)),
          position_(position) {}

    explicit ParseError(const std::string& what) : std::runtime_error(what), position_(0) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Bad record while loading data; the message names the offending row.
class IngestError : public DomainError {
public:
    IngestError(std::size_t row_index, const std::string& what)
        : DomainError("row " + std::to_string(row_index) + ": " + what), row_index_(row_index) {}

    std::size_t row_index() const noexcept { return row_index_; }

private:
    std::size_t row_index_;
};

}  // namespace olapcube
