#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charq/errors.hpp"
#include "charq/smith.hpp"

#include "test_util.hpp"

using namespace charq;

TEST_CASE("known elementary divisors") {
  const SmithData s = smith_normal_form(make_matrix({{1, 1}, {-1, 1}}));
  REQUIRE(s.rank == 2);
  CHECK(s.divisors == std::vector<Int>{Int(1), Int(2)});

  // gcd of entries is 2 and |det| = 8, so the chain is (2, 4)
  const SmithData t = smith_normal_form(make_matrix({{2, 4}, {6, 8}}));
  REQUIRE(t.rank == 2);
  CHECK(t.divisors == std::vector<Int>{Int(2), Int(4)});
}

TEST_CASE("zero matrix has empty divisor chain") {
  const SmithData s = smith_normal_form(IntMatrix::Zero(2, 3));
  CHECK(s.rank == 0);
  CHECK(s.divisors.empty());
  CHECK(s.left * IntMatrix::Zero(2, 3) * s.right == s.diagonal(2, 3));
}

TEST_CASE("rank") {
  CHECK(rank(make_matrix({{1, 1, -2}, {-1, 1, 1}})) == 2);
  CHECK(rank(IntMatrix::Zero(3, 2)) == 0);
  CHECK(rank(make_matrix({{2}, {4}})) == 1);
}

TEST_CASE("empty matrix rejected") {
  CHECK_THROWS_AS(smith_normal_form(IntMatrix(0, 0)), InputError);
}

TEST_CASE("reconstruction, divisibility chain and unimodularity on random matrices") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const Index m = dim(rng);
    const Index k = dim(rng);
    const IntMatrix g = test::random_matrix(rng, m, k, -9, 9);
    const SmithData s = smith_normal_form(g);

    CHECK(s.left * g * s.right == s.diagonal(m, k));
    for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i)
      CHECK(divides(s.divisors[i], s.divisors[i + 1]));
    for (const Int& e : s.divisors) CHECK(e.sign() > 0);
    CHECK(abs(test::cofactor_determinant(s.left)) == Int(1));
    CHECK(abs(test::cofactor_determinant(s.right)) == Int(1));
  }
}

TEST_CASE("divisors do not depend on the transform route") {
  // Same matrix transposed: elementary divisors are invariant.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix g = test::random_matrix(rng, 3, 2, -6, 6);
    const IntMatrix gt = g.transpose();
    CHECK(smith_normal_form(g).divisors == smith_normal_form(gt).divisors);
  }
}
