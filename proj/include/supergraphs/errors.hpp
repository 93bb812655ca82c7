#pragma once

#include <stdexcept>
#include <string>

namespace supergraphs {

// Malformed input: bad sizes, non-bijections, unknown labels.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request would materialize more elements than the explicit budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem check was requested outside the range where the theorem applies.
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace supergraphs
