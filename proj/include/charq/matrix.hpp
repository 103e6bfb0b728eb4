#pragma once

// Dense exact-integer matrices and the plain-text matrix file format.
//
// A matrix file is a header line "m n" followed by m rows of n
// whitespace-separated integers. Lines starting with '#' and blank lines
// are ignored.

#include "charq/integer.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace charq {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Int>;
using IntVector = Vector<Int>;
using Index = Eigen::Index;

/// Builds a matrix from rows given as nested initializer lists of int64.
IntMatrix make_matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

/// Selects the columns listed in `cols` (0-based, in the given order).
IntMatrix select_columns(const IntMatrix& m, const std::vector<int>& cols);

Int max_abs_entry(const IntMatrix& m);

bool is_zero_matrix(const IntMatrix& m);

IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix_file(const std::string& path);

/// Canonical one-line-per-row text form; identical matrices format identically.
std::string format_matrix(const IntMatrix& m);

}  // namespace charq
