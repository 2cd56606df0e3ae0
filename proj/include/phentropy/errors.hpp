#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phentropy {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed molecule file line; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A field failed validation (e.g. non-positive dissociation energy).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// The requested computation method has no closed form for these arguments.
class UnsupportedMethod : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Entropy index too close to 1; the Shannon limit should be used instead.
class DegenerateParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical procedure did not reach its tolerance. The best available
/// value and its error estimate are kept for diagnostics.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_value, double best_error)
      : std::runtime_error(what), best_value_(best_value), best_error_(best_error) {}
  double best_value() const noexcept { return best_value_; }
  double best_error() const noexcept { return best_error_; }

 private:
  double best_value_;
  double best_error_;
};

}  // namespace phentropy
