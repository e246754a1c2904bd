#pragma once

#include <stdexcept>
#include <string>

namespace frobcx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: non-prime characteristic, out-of-range dimension, etc.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A value does not fit in the requested number of base-p digits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its configured iteration guard. The message
/// carries the size that was requested so callers can switch engines.
class GuardExceeded : public Error {
 public:
  GuardExceeded(std::string what, std::string requested, std::string limit)
      : Error(std::move(what)),
        requested_(std::move(requested)),
        limit_(std::move(limit)) {}

  const std::string& requested() const noexcept { return requested_; }
  const std::string& limit() const noexcept { return limit_; }

 private:
  std::string requested_;
  std::string limit_;
};

/// An internal invariant failed. Reaching this is a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace frobcx
