#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slicerank {

/// Caller supplied arguments that violate an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A bounding tool whose hypotheses do not hold for the given input.
class InapplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slicerank
