#pragma once

// Kernel counting and column-space membership over Z_q, computed from the
// Smith normal form rather than by enumeration.

#include "charq/matrix.hpp"
#include "charq/smith.hpp"

#include <cstdint>

namespace charq {

// |{x in Z_q^m : x * G == 0 (mod q)}| for an m x k matrix G; equals
// (prod_j gcd(e_j, q)) * q^(m - rank).
Int kernel_cardinality(const IntMatrix& g, std::int64_t q);
Int kernel_cardinality(const SmithData& snf, Index rows, std::int64_t q);

// True iff the q-reduction of b lies in the Z_q-span of the columns of A.
// With S*A*T = diag(e), the test is gcd(e_i, q) | (S*b)_i for i < rank and
// q | (S*b)_i for the remaining coordinates.
bool in_column_space_mod_q(const IntMatrix& a, const IntVector& b, std::int64_t q);
bool in_column_space_mod_q(const SmithData& snf, const IntVector& b, std::int64_t q);

}  // namespace charq
