#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regmeasure {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (DFA files, regexes). Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates an operation's precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

class NotStarFree : public InputError {
 public:
  using InputError::InputError;
};

class NotGroupLanguage : public InputError {
 public:
  using InputError::InputError;
};

/// The kernel of the syntactic monoid has a nontrivial H-class, so no
/// generalized definite sandwich converges.
class ImmeasurableKernel : public InputError {
 public:
  using InputError::InputError;
};

/// A configured resource cap was hit. Never silently truncated.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t reached, std::size_t cap)
      : Error(what + " (reached " + std::to_string(reached) + ", cap " +
              std::to_string(cap) + ")"),
        reached_(reached),
        cap_(cap) {}

  std::size_t reached() const noexcept { return reached_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t reached_;
  std::size_t cap_;
};

/// An internal consistency check failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace regmeasure
