#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbsect {

/// Misuse of the API: mismatched contexts, zero divisors in a divisor list,
/// leading term of the zero polynomial and similar contract violations.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division by zero in an exact coefficient field.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameter values that violate the admissible ranges of a model.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position, const std::string& unit = "position")
      : std::runtime_error(message + " at " + unit + " " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gbsect
