#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logdiv {

/// Malformed user input (polynomial text, arrangement files, flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A configured resource bound (degree, pair count, wall clock) was hit.
/// Computations never return truncated results; they throw this instead.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input does not hold (e.g. an
/// inhomogeneous polynomial passed where a grading is required).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace logdiv
