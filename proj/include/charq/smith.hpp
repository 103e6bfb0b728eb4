#pragma once

// Smith normal form over the integers with unimodular transform tracking.

#include "charq/matrix.hpp"

#include <vector>

namespace charq {

// left * G * right == diag({divisors}; rows, cols), with |det left| =
// |det right| = 1 and divisors[0] | divisors[1] | ... (all positive).
struct SmithData {
  Index rank = 0;
  std::vector<Int> divisors;
  IntMatrix left;
  IntMatrix right;

  /// Largest elementary divisor; requires rank > 0.
  const Int& largest_divisor() const { return divisors.back(); }

  /// diag({divisors}; rows, cols) as a dense matrix.
  IntMatrix diagonal(Index rows, Index cols) const;
};

SmithData smith_normal_form(const IntMatrix& g);

Index rank(const IntMatrix& g);

}  // namespace charq
