#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clawreconf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, or 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An operation was called outside its domain (wrong graph class, size mismatch, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A brute-force search hit its configured state cap. Never to be read as "no".
class InconclusiveError : public Error {
public:
    using Error::Error;
};

/// A constructed object failed its own replay check. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace clawreconf
