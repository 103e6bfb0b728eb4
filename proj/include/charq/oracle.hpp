#pragma once

// Ground-truth enumeration over Z_q^m. Everything here counts points
// directly, with no shared code with the Smith-normal-form route, so the
// two can check each other.

#include "charq/matrix.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace charq {

// Budget is measured in evaluations, q^m * n, independent of wall time.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct PointSet {
  std::int64_t q = 1;
  Index dim = 0;
  std::set<std::vector<std::int64_t>> points;

  bool operator==(const PointSet&) const = default;
};

/// |{x in Z_q^m : x * c_j != 0 (mod q) for every column j}|.
std::uint64_t count_complement(const IntMatrix& c, std::int64_t q,
                               std::uint64_t budget = kDefaultBudget, unsigned threads = 1);

/// The exact solution set of x * C_J == 0 (mod q).
PointSet enumerate_flat(const IntMatrix& c_j, std::int64_t q,
                        std::uint64_t budget = kDefaultBudget);

/// True iff the two solution sets coincide (same ambient space required).
bool flats_equal(const IntMatrix& c_i, const IntMatrix& c_j, std::int64_t q,
                 std::uint64_t budget = kDefaultBudget);

}  // namespace charq
