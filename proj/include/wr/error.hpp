#pragma once

#include <stdexcept>
#include <string>

namespace wr {

/// Base class for every error raised by the toolkit. The CLI maps the
/// concrete subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter below its documented minimum, or an otherwise invalid call.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An exact computation was asked for beyond its size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed (nonpositive activity, non-regular graph...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A randomized construction gave up after its attempt budget.
class RetryExhaustedError : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same exact quantity disagreed.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace wr
