#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schreier {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A letter names an undeclared family or an index outside its domain.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Instantiation bindings fail a guard or a parameter range.
class GuardViolation : public Error {
 public:
  using Error::Error;
};

class NotKernelElement : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A replay step could not be performed on an interior generator.
class ReplayFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace schreier
