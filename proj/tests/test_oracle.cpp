#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charq/errors.hpp"
#include "charq/oracle.hpp"

#include "test_util.hpp"

#include <bit>
#include <set>

using namespace charq;

namespace {

const IntMatrix kDemo = make_matrix({{1, 1, -2}, {-1, 1, 1}});

std::set<std::vector<std::int64_t>> points_of(std::initializer_list<std::vector<std::int64_t>> v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("complement counts") {
  CHECK(count_complement(kDemo, 5) == 12);  // 25 - 13 points on the union
  CHECK(count_complement(kDemo, 1) == 0);
  CHECK(count_complement(make_matrix({{1}}), 4) == 3);
}

TEST_CASE("flat enumeration fixtures") {
  const IntMatrix c12 = make_matrix({{1, 1}, {-1, 1}});
  CHECK(enumerate_flat(c12, 4).points == points_of({{0, 0}, {2, 2}}));

  const IntMatrix c23 = make_matrix({{1, -2}, {1, 1}});
  CHECK(enumerate_flat(c23, 6).points == points_of({{0, 0}, {2, 4}, {4, 2}}));

  // one nonzero column and prime q: a rank-one kernel with q^(m-1) points
  const IntMatrix single = make_matrix({{1}, {-1}});
  CHECK(enumerate_flat(single, 7).points.size() == 7);
}

TEST_CASE("flat equality fixtures") {
  const IntMatrix c1 = make_matrix({{1}, {-1}});
  const IntMatrix c2 = make_matrix({{1}, {1}});
  const IntMatrix c3 = make_matrix({{-2}, {1}});
  CHECK(flats_equal(c1, c2, 2));
  CHECK(flats_equal(c2, c3, 3));
  CHECK_FALSE(flats_equal(c1, c2, 5));
}

TEST_CASE("complement identity: count + |union| = q^m") {
  std::mt19937 rng(321);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix c = test::random_arrangement_matrix(rng, 2, 3, -4, 4);
    for (std::int64_t q = 1; q <= 9; ++q) {
      std::set<std::vector<std::int64_t>> on_union;
      for (Index j = 0; j < c.cols(); ++j) {
        const PointSet h = enumerate_flat(c.col(j), q);
        on_union.insert(h.points.begin(), h.points.end());
      }
      CHECK(count_complement(c, q) + on_union.size() ==
            static_cast<std::uint64_t>(q) * static_cast<std::uint64_t>(q));
    }
  }
}

TEST_CASE("count equals inclusion-exclusion over flat cardinalities") {
  std::mt19937 rng(654);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix c = test::random_arrangement_matrix(rng, 2, 3, -3, 3);
    const int n = static_cast<int>(c.cols());
    for (std::int64_t q = 1; q <= 8; ++q) {
      Int acc = pow(Int(q), 2);
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> cols;
        for (int j = 0; j < n; ++j)
          if (mask & (1u << j)) cols.push_back(j);
        const Int card(static_cast<long long>(
            enumerate_flat(select_columns(c, cols), q).points.size()));
        if (std::popcount(mask) % 2 == 1)
          acc -= card;
        else
          acc += card;
      }
      CHECK(acc == Int(count_complement(c, q)));
    }
  }
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(count_complement(kDemo, 101, 10000), BudgetError);
  CHECK_THROWS_AS(enumerate_flat(kDemo, 101, 10000), BudgetError);
}

TEST_CASE("thread count never changes the count") {
  for (std::int64_t q : {1, 2, 7, 12, 30}) {
    const auto serial = count_complement(kDemo, q, kDefaultBudget, 1);
    CHECK(count_complement(kDemo, q, kDefaultBudget, 4) == serial);
    CHECK(count_complement(kDemo, q, kDefaultBudget, 13) == serial);
  }
}
