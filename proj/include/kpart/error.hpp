#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kpart {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input rejected by a precondition (degenerate point set, odd size, bad k, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Malformed text; line is 1-based, 0 when the error is not tied to a line.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An exact search ran out of its node budget before proving optimality.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Randomized construction failed to produce a certified instance.
class InternalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace kpart
