#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcyl {

/// Malformed word, polynomial, presentation or endomorphism text.
/// `line` is 0 when the input was a single string rather than a file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Words from different generator contexts were combined.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A ring map was asked for a generator it does not assign.
class UnassignedGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotUnimodular : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No factorization strategy applied, or the step budget ran out.
/// Quotient classes depending on the factorization are then unknown.
class FactorizationIncomplete : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A verified algebraic step failed (inexact Bareiss division, overflow).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hcyl
