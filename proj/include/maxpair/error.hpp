#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maxpair {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed presentation, automorphism literal or group file.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A pc presentation whose collected multiplication is not a group law.
class InconsistentPresentation : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Generator images that do not extend to a homomorphism.  The witness is a
/// pair (x, y) of source elements with f(xy) != f(x) f(y).
class NotHomomorphism : public Error {
 public:
  NotHomomorphism(const std::string& message, std::uint32_t x, std::uint32_t y)
      : Error(message), x_(x), y_(y) {}

  std::uint32_t witness_x() const noexcept { return x_; }
  std::uint32_t witness_y() const noexcept { return y_; }

 private:
  std::uint32_t x_;
  std::uint32_t y_;
};

}  // namespace maxpair
