#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gpi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (descriptors, expressions, templates).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Two operands belong to different algebras.
class AlgebraMismatch : public Error {
 public:
  AlgebraMismatch() : Error("operands belong to different algebras") {}
};

/// An exhaustive enumeration would exceed the configured element budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, double requested, double budget)
      : Error(format(what, requested, budget)), requested_(requested), budget_(budget) {}

  double requested() const { return requested_; }
  double budget() const { return budget_; }

 private:
  static std::string format(const std::string& what, double requested, double budget) {
    std::ostringstream os;
    os.precision(15);
    os << what << ": " << requested << " elements exceeds budget " << budget;
    return os.str();
  }

  double requested_;
  double budget_;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gpi
