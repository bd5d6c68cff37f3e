#pragma once

#include <stdexcept>
#include <string>

namespace hlat {

/// Malformed input: bad text, bad file contents, mismatched dimensions or moduli.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but violates a mathematical precondition
/// (non self-conjugate substitution, indefinite Gram, even determinant, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact integer arithmetic left the 64-bit range. Never wraps.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Enumeration node budget exhausted before the search completed.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(unsigned long long budget)
      : std::runtime_error("enumeration node budget exhausted (" + std::to_string(budget) + " nodes)"),
        budget_(budget) {}
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long budget_;
};

/// A result contradicted a classical theorem; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hlat
