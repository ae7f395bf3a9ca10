#pragma once

#include <stdexcept>
#include <string>

namespace bhp {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (CLI exit code 1).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed BHP or certificate text (CLI exit code 2).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace bhp
