#include "charq/minors.hpp"

#include "charq/errors.hpp"

#include <string>
#include <utility>
#include <vector>

namespace charq {

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant: matrix must be square");
  const Index n = a.rows();
  if (n == 0) return Int(1);

  IntMatrix w = a;
  Int prev(1);
  int sign = 1;
  for (Index t = 0; t + 1 < n; ++t) {
    if (w(t, t).is_zero()) {
      Index p = -1;
      for (Index i = t + 1; i < n; ++i)
        if (!w(i, t).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      w.row(t).swap(w.row(p));
      sign = -sign;
    }
    // Bareiss step: every division below is exact.
    for (Index i = t + 1; i < n; ++i) {
      for (Index j = t + 1; j < n; ++j)
        w(i, j) = divexact(w(t, t) * w(i, j) - w(i, t) * w(t, j), prev);
      w(i, t) = Int(0);
    }
    prev = w(t, t);
  }
  Int det = w(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

namespace {

bool next_combination(std::vector<Index>& c, Index n) {
  const Index k = static_cast<Index>(c.size());
  Index i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (Index j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

std::vector<Index> first_combination(Index k) {
  std::vector<Index> c(k);
  for (Index i = 0; i < k; ++i) c[i] = i;
  return c;
}

// C(n, k) with saturation at `limit` to keep cap checks cheap.
std::uint64_t binomial_capped(Index n, Index k, std::uint64_t limit) {
  Int b(1);
  const Int lim(static_cast<long long>(limit));
  for (Index i = 0; i < k; ++i) {
    b *= Int(static_cast<long long>(n - i));
    b /= Int(static_cast<long long>(i + 1));
    if (b > lim) return limit + 1;
  }
  return static_cast<std::uint64_t>(b.to_int64());
}

}  // namespace

Int nonzero_minors_lcm(const IntMatrix& g, std::uint64_t max_minors) {
  if (is_zero_matrix(g)) throw InputError("nonzero_minors_lcm: zero matrix has no nonzero minors");
  const Index m = g.rows();
  const Index n = g.cols();
  const Index jmax = std::min(m, n);

  std::uint64_t total = 0;
  for (Index j = 1; j <= jmax; ++j) {
    const std::uint64_t r = binomial_capped(m, j, max_minors);
    const std::uint64_t c = binomial_capped(n, j, max_minors);
    if (r > max_minors / (c == 0 ? 1 : c)) total = max_minors + 1;
    if (total <= max_minors) total += r * c;
    if (total > max_minors)
      throw CapError("nonzero_minors_lcm: more than " + std::to_string(max_minors) +
                     " minors for a " + std::to_string(m) + " x " + std::to_string(n) +
                     " matrix; raise the cap to proceed");
  }

  Int acc(1);
  for (Index j = 1; j <= jmax; ++j) {
    std::vector<Index> rows = first_combination(j);
    do {
      std::vector<Index> cols = first_combination(j);
      do {
        IntMatrix sub(j, j);
        for (Index a = 0; a < j; ++a)
          for (Index b = 0; b < j; ++b) sub(a, b) = g(rows[a], cols[b]);
        Int det = determinant(sub);
        if (!det.is_zero()) acc = lcm(acc, det);
      } while (next_combination(cols, n));
    } while (next_combination(rows, m));
  }
  return abs(acc);
}

}  // namespace charq
