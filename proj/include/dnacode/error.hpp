#pragma once

#include <stdexcept>
#include <string>

namespace dnacode {

/// Base for every error raised by the library. `code()` is a short stable
/// identifier used in machine-readable CLI error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// A precondition on an argument does not hold (bad length, radius, alphabet...).
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error("invalid_argument", what) {}
};

/// The received word cannot be decoded within the code's guarantees.
class DecodeError : public Error {
public:
    explicit DecodeError(const std::string& what, std::string code = "uncorrectable")
        : Error(std::move(code), what) {}
};

/// An enumeration or search exceeded its configured state bound.
class BoundExceeded : public Error {
public:
    explicit BoundExceeded(const std::string& what) : Error("bound_exceeded", what) {}
};

} // namespace dnacode
