#pragma once

#include <stdexcept>
#include <string>

namespace charq {

// Malformed input text (matrix files, JSON payloads).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally valid input that violates a precondition (zero column,
// dimension mismatch, q < 1, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Subset-enumeration cap exceeded.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute-force enumeration budget exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace charq
