#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace faithgraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments from the caller: unknown labels, overlapping sets,
/// mismatched ground sets, malformed matrices.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Raised when an exhaustive computation would exceed a configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A text input could not be parsed. Carries the source location.
class ParseError : public InputError {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column,
             const std::string& message)
      : InputError(source + ":" + std::to_string(line) + ":" +
                   std::to_string(column) + ": " + message),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

/// A result that the theory guarantees failed to materialize. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace faithgraph
