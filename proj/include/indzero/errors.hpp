#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indzero {

/// Input outside the domain of a function (log of 0, arg at -1, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A size guardrail (vertex cap, enumeration bound, series cap) was hit.
class CapExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Root bracketing failed to converge.
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace indzero
