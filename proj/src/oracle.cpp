#include "charq/oracle.hpp"

#include "charq/errors.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <utility>

namespace charq {

namespace {

// Columns reduced into [0, q), column-major: reduced[j][i].
std::vector<std::vector<std::int64_t>> reduce_columns(const IntMatrix& c, std::int64_t q) {
  std::vector<std::vector<std::int64_t>> red(c.cols());
  const Int qi(q);
  for (Index j = 0; j < c.cols(); ++j) {
    red[j].resize(c.rows());
    for (Index i = 0; i < c.rows(); ++i) {
      Int r = c(i, j) % qi;
      if (r.sign() < 0) r += qi;
      red[j][i] = r.to_int64();
    }
  }
  return red;
}

void check_budget(const IntMatrix& c, std::int64_t q, std::uint64_t budget, const char* who) {
  if (q < 1) throw InputError(std::string(who) + ": q must be positive");
  Int cost = pow(Int(q), static_cast<unsigned long>(c.rows()));
  cost *= Int(static_cast<long long>(std::max<Index>(c.cols(), 1)));
  if (cost > Int(static_cast<long long>(budget)))
    throw BudgetError(std::string(who) + ": q^m * n = " + cost.str() +
                      " exceeds the enumeration budget of " + std::to_string(budget));
}

// Walks x over Z_q^m in odometer order, keeping per-column partial dot
// products by depth, and calls fn(dots) at every full point.
template <class Fn>
void walk_points(const std::vector<std::vector<std::int64_t>>& cols, Index m, std::int64_t q,
                 std::int64_t first_lo, std::int64_t first_hi, Fn&& fn) {
  const std::size_t n = cols.size();
  std::vector<std::int64_t> x(static_cast<std::size_t>(m), 0);
  // partial[d * n + j] = sum_{i < d} x_i * cols[j][i] mod q
  std::vector<std::int64_t> partial(
      std::max<std::size_t>(static_cast<std::size_t>(m + 1) * n, 1), 0);

  x[0] = first_lo;
  Index d = 0;
  while (true) {
    if (x[static_cast<std::size_t>(d)] >= (d == 0 ? first_hi : q)) {
      if (d == 0) break;
      --d;
      ++x[static_cast<std::size_t>(d)];
      continue;
    }
    const std::int64_t xd = x[static_cast<std::size_t>(d)];
    for (std::size_t j = 0; j < n; ++j)
      partial[(static_cast<std::size_t>(d) + 1) * n + j] =
          (partial[static_cast<std::size_t>(d) * n + j] +
           xd * cols[j][static_cast<std::size_t>(d)]) %
          q;
    if (d + 1 == m) {
      fn(&partial[static_cast<std::size_t>(m) * n], x);
      ++x[static_cast<std::size_t>(d)];
    } else {
      ++d;
      x[static_cast<std::size_t>(d)] = 0;
    }
  }
}

}  // namespace

std::uint64_t count_complement(const IntMatrix& c, std::int64_t q, std::uint64_t budget,
                               unsigned threads) {
  check_budget(c, q, budget, "count_complement");
  const Index m = c.rows();
  const auto cols = reduce_columns(c, q);
  const std::size_t n = cols.size();

  auto count_range = [&](std::int64_t lo, std::int64_t hi) -> std::uint64_t {
    std::uint64_t local = 0;
    walk_points(cols, m, q, lo, hi, [&](const std::int64_t* dots, const auto&) {
      for (std::size_t j = 0; j < n; ++j)
        if (dots[j] == 0) return;
      ++local;
    });
    return local;
  };

  const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(q)));
  if (t == 1) return count_range(0, q);

  // Partition the first coordinate; integer sums commute, so the result is
  // independent of the split.
  std::vector<std::uint64_t> partials(t, 0);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < t; ++w) {
    const std::int64_t lo = q * w / t;
    const std::int64_t hi = q * (w + 1) / t;
    workers.emplace_back([&, w, lo, hi] { partials[w] = count_range(lo, hi); });
  }
  for (auto& th : workers) th.join();
  std::uint64_t total = 0;
  for (std::uint64_t p : partials) total += p;
  return total;
}

PointSet enumerate_flat(const IntMatrix& c_j, std::int64_t q, std::uint64_t budget) {
  check_budget(c_j, q, budget, "enumerate_flat");
  const Index m = c_j.rows();
  const auto cols = reduce_columns(c_j, q);
  const std::size_t n = cols.size();

  PointSet out;
  out.q = q;
  out.dim = m;
  walk_points(cols, m, q, 0, q, [&](const std::int64_t* dots, const std::vector<std::int64_t>& x) {
    for (std::size_t j = 0; j < n; ++j)
      if (dots[j] != 0) return;
    out.points.insert(x);
  });
  return out;
}

bool flats_equal(const IntMatrix& c_i, const IntMatrix& c_j, std::int64_t q,
                 std::uint64_t budget) {
  if (c_i.rows() != c_j.rows())
    throw InputError("flats_equal: ambient dimensions differ");
  return enumerate_flat(c_i, q, budget) == enumerate_flat(c_j, q, budget);
}

}  // namespace charq
