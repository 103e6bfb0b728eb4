#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charq/errors.hpp"
#include "charq/minors.hpp"

#include "test_util.hpp"

using namespace charq;

TEST_CASE("determinant matches cofactor expansion") {
  CHECK(determinant(make_matrix({{1, 1}, {-1, 1}})) == Int(2));
  CHECK(determinant(make_matrix({{2, 4}, {6, 8}})) == Int(-8));
  CHECK(determinant(IntMatrix::Identity(3, 3)) == Int(1));
  CHECK(determinant(IntMatrix::Zero(3, 3)) == Int(0));

  std::mt19937 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    const Index n = 1 + trial % 4;
    const IntMatrix a = test::random_matrix(rng, n, n, -7, 7);
    CHECK(determinant(a) == test::cofactor_determinant(a));
  }
}

TEST_CASE("determinant needs a zero-pivot row swap") {
  const IntMatrix a = make_matrix({{0, 1, 2}, {3, 0, 1}, {1, 1, 0}});
  CHECK(determinant(a) == test::cofactor_determinant(a));
}

TEST_CASE("nonzero minors lcm on fixtures") {
  CHECK(nonzero_minors_lcm(make_matrix({{1, 1, -2}, {-1, 1, 1}})) == Int(6));
  CHECK(nonzero_minors_lcm(IntMatrix::Identity(2, 2)) == Int(1));
  CHECK(nonzero_minors_lcm(make_matrix({{2, 0}, {0, 3}})) == Int(6));
  CHECK(nonzero_minors_lcm(make_matrix({{2, 3}})) == Int(6));
}

TEST_CASE("zero matrix has no nonzero minors") {
  CHECK_THROWS_AS(nonzero_minors_lcm(IntMatrix::Zero(2, 2)), InputError);
}

TEST_CASE("minor cap") {
  std::mt19937 rng(1);
  const IntMatrix a = test::random_matrix(rng, 4, 5, -3, 3);
  CHECK_THROWS_AS(nonzero_minors_lcm(a, 10), CapError);
}

TEST_CASE("every nonzero minor divides the lcm") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix g = test::random_matrix(rng, 3, 4, -5, 5);
    if (is_zero_matrix(g)) continue;
    const Int acc = nonzero_minors_lcm(g);
    // spot-check all 2x2 minors against the accumulated lcm
    for (Index r1 = 0; r1 < g.rows(); ++r1)
      for (Index r2 = r1 + 1; r2 < g.rows(); ++r2)
        for (Index c1 = 0; c1 < g.cols(); ++c1)
          for (Index c2 = c1 + 1; c2 < g.cols(); ++c2) {
            const Int det = g(r1, c1) * g(r2, c2) - g(r1, c2) * g(r2, c1);
            if (!det.is_zero()) CHECK(divides(det, acc));
          }
  }
}
