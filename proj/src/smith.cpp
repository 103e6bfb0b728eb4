#include "charq/smith.hpp"

#include "charq/errors.hpp"

#include <utility>

namespace charq {

IntMatrix SmithData::diagonal(Index rows, Index cols) const {
  IntMatrix d = IntMatrix::Zero(rows, cols);
  for (Index i = 0; i < static_cast<Index>(divisors.size()); ++i) d(i, i) = divisors[i];
  return d;
}

namespace {

// Smallest nonzero entry (by absolute value) of d(t:, t:); false if that
// block is all zero.
bool find_pivot(const IntMatrix& d, Index t, Index& pi, Index& pj) {
  bool found = false;
  Int best;
  for (Index i = t; i < d.rows(); ++i)
    for (Index j = t; j < d.cols(); ++j) {
      if (d(i, j).is_zero()) continue;
      Int a = abs(d(i, j));
      if (!found || a < best) {
        found = true;
        best = std::move(a);
        pi = i;
        pj = j;
      }
    }
  return found;
}

bool cross_clear(const IntMatrix& d, Index t) {
  for (Index i = t + 1; i < d.rows(); ++i)
    if (!d(i, t).is_zero()) return false;
  for (Index j = t + 1; j < d.cols(); ++j)
    if (!d(t, j).is_zero()) return false;
  return true;
}

void add_row_multiple(IntMatrix& m, Index dst, Index src, const Int& k) {
  for (Index j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}

void add_col_multiple(IntMatrix& m, Index dst, Index src, const Int& k) {
  for (Index i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}

}  // namespace

SmithData smith_normal_form(const IntMatrix& g) {
  const Index m = g.rows();
  const Index k = g.cols();
  if (m < 1 || k < 1) throw InputError("smith_normal_form: matrix must be nonempty");

  IntMatrix d = g;
  SmithData out;
  out.left = IntMatrix::Identity(m, m);
  out.right = IntMatrix::Identity(k, k);

  const Index steps = std::min(m, k);
  for (Index t = 0; t < steps; ++t) {
    Index pi = t, pj = t;
    if (!find_pivot(d, t, pi, pj)) break;  // remaining block is zero

    for (;;) {
      // Move the minimal entry to (t, t); a small pivot keeps quotient
      // remainders shrinking.
      find_pivot(d, t, pi, pj);
      if (pi != t) {
        d.row(t).swap(d.row(pi));
        out.left.row(t).swap(out.left.row(pi));
      }
      if (pj != t) {
        d.col(t).swap(d.col(pj));
        out.right.col(t).swap(out.right.col(pj));
      }

      for (Index i = t + 1; i < m; ++i) {
        if (d(i, t).is_zero()) continue;
        Int q = d(i, t) / d(t, t);
        if (!q.is_zero()) {
          add_row_multiple(d, i, t, -q);
          add_row_multiple(out.left, i, t, -q);
        }
      }
      for (Index j = t + 1; j < k; ++j) {
        if (d(t, j).is_zero()) continue;
        Int q = d(t, j) / d(t, t);
        if (!q.is_zero()) {
          add_col_multiple(d, j, t, -q);
          add_col_multiple(out.right, j, t, -q);
        }
      }
      if (!cross_clear(d, t)) continue;  // nonzero remainders left; re-pivot

      // Divisibility fix-up: the pivot must divide the rest of the block.
      Index bi = -1, bj = -1;
      for (Index i = t + 1; i < m && bi < 0; ++i)
        for (Index j = t + 1; j < k; ++j)
          if (!divides(d(t, t), d(i, j))) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      add_row_multiple(d, t, bi, Int(1));
      add_row_multiple(out.left, t, bi, Int(1));
      (void)bj;
    }

    if (d(t, t).sign() < 0) {
      for (Index j = 0; j < k; ++j) d(t, j) = -d(t, j);
      for (Index j = 0; j < m; ++j) out.left(t, j) = -out.left(t, j);
    }
    out.divisors.push_back(d(t, t));
    out.rank = t + 1;
  }
  return out;
}

Index rank(const IntMatrix& g) { return smith_normal_form(g).rank; }

}  // namespace charq
