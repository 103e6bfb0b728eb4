#pragma once

// Exact determinants and minor enumeration.

#include "charq/matrix.hpp"

#include <cstdint>

namespace charq {

inline constexpr std::uint64_t kDefaultMaxSubsets = std::uint64_t{1} << 22;

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);

// lcm of |det| over all nonzero j x j minors, 1 <= j <= min(rows, cols).
// Enumerates row/column subsets directly; throws CapError when the number
// of minors exceeds `max_minors`, InputError on a zero matrix.
Int nonzero_minors_lcm(const IntMatrix& g, std::uint64_t max_minors = kDefaultMaxSubsets);

}  // namespace charq
