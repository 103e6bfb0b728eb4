#pragma once

// Shared helpers for the test suites: seeded random matrices and small
// independent oracles (cofactor determinants, literal period scans) that
// deliberately avoid the library's own algorithms.

#include "charq/matrix.hpp"

#include <random>
#include <vector>

namespace charq::test {

inline IntMatrix random_matrix(std::mt19937& rng, Index m, Index n, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  IntMatrix out(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) out(i, j) = Int(entry(rng));
  return out;
}

// Random matrix with every column nonzero (valid arrangement input).
inline IntMatrix random_arrangement_matrix(std::mt19937& rng, Index m, Index n, int lo, int hi) {
  std::uniform_int_distribution<int> row(0, static_cast<int>(m) - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  IntMatrix out = random_matrix(rng, m, n, lo, hi);
  for (Index j = 0; j < n; ++j) {
    bool zero = true;
    for (Index i = 0; i < m; ++i)
      if (!out(i, j).is_zero()) {
        zero = false;
        break;
      }
    if (zero) out(row(rng), j) = Int(sign(rng) == 0 ? 1 : -1);
  }
  return out;
}

// Cofactor expansion along the first row; exponential, for cross-checks only.
inline Int cofactor_determinant(const IntMatrix& a) {
  const Index n = a.rows();
  if (n == 0) return Int(1);
  if (n == 1) return a(0, 0);
  Int acc(0);
  for (Index j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    IntMatrix sub(n - 1, n - 1);
    for (Index i = 1; i < n; ++i) {
      Index cc = 0;
      for (Index jj = 0; jj < n; ++jj) {
        if (jj == j) continue;
        sub(i - 1, cc++) = a(i, jj);
      }
    }
    const Int term = a(0, j) * cofactor_determinant(sub);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace charq::test
