#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reveng {

// Base for every error raised by the library. Reported by the CLI with exit
// code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Words or subgroup generators that reference generators outside the
// presentation they are used with.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

// Precondition violations on operation arguments.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A computed state contradicts itself (parity of b2 + sigma, a coset table
// that fails verification, ...). Reported with exit code 2.
class InconsistentState : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string const& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        message_(what) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::string const& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace reveng
