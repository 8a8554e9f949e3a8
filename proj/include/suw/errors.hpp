#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace suw {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (word or decimal). Reported by the CLI as a usage error.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A symbol outside 1..sigma. `position` is 1-based.
class SymbolOutOfRange : public Error {
public:
    SymbolOutOfRange(std::size_t position, unsigned long long value)
        : Error("symbol out of range at position " + std::to_string(position) + ": " +
                std::to_string(value)),
          position_(position), value_(value) {}

    std::size_t position() const noexcept { return position_; }
    unsigned long long value() const noexcept { return value_; }

private:
    std::size_t position_;
    unsigned long long value_;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

class InvalidK : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class RankOutOfRange : public Error {
public:
    using Error::Error;
};

/// The requested set U(n,k,sigma) has no members.
class EmptySet : public Error {
public:
    using Error::Error;
};

/// A brute-force oracle refused an instance that is too large to enumerate.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace suw
