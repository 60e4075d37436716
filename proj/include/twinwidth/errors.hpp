#pragma once

#include <stdexcept>
#include <string>

namespace twinwidth {

/// Base class for every domain error raised by the library.  The CLI maps
/// these to exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold (unknown vertex, u = v,
/// non-consecutive ends, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An explicit size or work cap was exceeded.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what_cap, std::size_t value, std::size_t cap)
        : Error(what_cap + " cap exceeded: " + std::to_string(value) + " > " + std::to_string(cap)),
          value_(value), cap_(cap) {}

    std::size_t value() const noexcept { return value_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t value_;
    std::size_t cap_;
};

/// Text input that does not follow one of the documented file formats.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Raised when a construction whose success is guaranteed by theory fails;
/// always a bug or a violated precondition upstream.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace twinwidth
