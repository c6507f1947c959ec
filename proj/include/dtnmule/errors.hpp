#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dtnmule {

// Bad argument values (non-positive mean, zero fleet, horizon too short, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation grid or argument outside the supported domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A closed form was asked for a configuration it does not cover.
class UnsupportedConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke an ordering or state precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dtnmule
