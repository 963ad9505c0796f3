#pragma once

#include <stdexcept>
#include <string>

namespace heckelab {

/// Input outside the mathematical domain of an operation (zero evaluation
/// point, |t| != 1, malformed partition, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operands live in different groups (rank or kind differ).
class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An affine computation produced a basis element longer than the caller's
/// length cutoff. Results are never silently truncated.
class CutoffExceeded : public std::runtime_error {
 public:
  CutoffExceeded(int length, int cutoff)
      : std::runtime_error("length " + std::to_string(length) +
                           " exceeds cutoff " + std::to_string(cutoff)),
        length_(length),
        cutoff_(cutoff) {}

  int length() const noexcept { return length_; }
  int cutoff() const noexcept { return cutoff_; }

 private:
  int length_;
  int cutoff_;
};

/// A rewriting procedure ran out of its step budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text that does not match the documented grammar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace heckelab
