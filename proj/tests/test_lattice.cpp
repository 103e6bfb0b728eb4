#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charq/errors.hpp"
#include "charq/lattice.hpp"
#include "charq/oracle.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <set>

using namespace charq;

namespace {

Arrangement demo() { return Arrangement(make_matrix({{1, 1, -2}, {-1, 1, 1}})); }

std::set<std::vector<int>> closure_family(const IntersectionLattice& l) {
  std::set<std::vector<int>> fam;
  for (const Flat& f : l.flats) fam.insert(f.closure);
  return fam;
}

const Flat* find_flat(const IntersectionLattice& l, const std::vector<int>& closure) {
  for (const Flat& f : l.flats)
    if (f.closure == closure) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("q0 bound fixtures") {
  CHECK(q0_bound(Arrangement(IntMatrix::Identity(1, 1))) == Int(1));
  CHECK(q0_bound(Arrangement(make_matrix({{9, 1}, {0, 1}}))) >= Int(9));
  CHECK(q0_bound(demo()) >= Int(2));
}

TEST_CASE("containment tests") {
  const Arrangement a = demo();
  CHECK(covers_flat(a, 2, {1}, 3));      // H_2 = H_3 mod 3
  CHECK(covers_flat(a, 1, {1, 2}, 9));   // j in J
  CHECK(covers_flat(a, 0, {1, 2}, 5));   // the {2,3} flat is the origin mod 5
  CHECK_FALSE(covers_flat(a, 2, {1}, 5));
  CHECK_THROWS_AS(covers_flat(a, 0, {}, 5), InputError);
}

TEST_CASE("demo lattices match the four periodic shapes") {
  const Arrangement a = demo();

  const IntersectionLattice l5 = build_lattice(a, 5);  // gcd 1
  CHECK(closure_family(l5) ==
        std::set<std::vector<int>>{{}, {0}, {1}, {2}, {0, 1, 2}});
  CHECK(find_flat(l5, {})->cardinality == Int(25));
  CHECK(find_flat(l5, {0})->cardinality == Int(5));
  CHECK(find_flat(l5, {0, 1, 2})->cardinality == Int(1));

  const IntersectionLattice l8 = build_lattice(a, 8);  // gcd 2
  CHECK(closure_family(l8) ==
        std::set<std::vector<int>>{{}, {0}, {1}, {2}, {0, 1}, {0, 1, 2}});
  CHECK(find_flat(l8, {0, 1})->cardinality == Int(2));

  const IntersectionLattice l9 = build_lattice(a, 9);  // gcd 3
  CHECK(closure_family(l9) ==
        std::set<std::vector<int>>{{}, {0}, {1}, {2}, {1, 2}, {0, 1, 2}});
  CHECK(find_flat(l9, {1, 2})->cardinality == Int(3));

  const IntersectionLattice l12 = build_lattice(a, 12);  // gcd 6
  CHECK(closure_family(l12) ==
        std::set<std::vector<int>>{{}, {0}, {1}, {2}, {0, 1}, {1, 2}, {0, 1, 2}});
  CHECK(l12.flats.size() == 7);
  CHECK(find_flat(l12, {0, 1})->cardinality == Int(2));
  CHECK(find_flat(l12, {1, 2})->cardinality == Int(3));
  CHECK(find_flat(l12, {})->cardinality == Int(144));
}

TEST_CASE("demo lattice exceptions at small q") {
  const Arrangement a = demo();

  // q = 1: a single point, every hyperplane is all of V
  const IntersectionLattice l1 = build_lattice(a, 1);
  REQUIRE(l1.flats.size() == 1);
  CHECK(l1.flats[0].closure == std::vector<int>{0, 1, 2});
  CHECK(l1.flats[0].cardinality == Int(1));
  CHECK(l1.flats[0].generator.empty());
  CHECK(l1.covers.empty());

  // q = 2: H_1 = H_2
  const IntersectionLattice l2 = build_lattice(a, 2);
  CHECK(closure_family(l2) ==
        std::set<std::vector<int>>{{}, {0, 1}, {2}, {0, 1, 2}});

  // q = 3: H_2 = H_3
  const IntersectionLattice l3 = build_lattice(a, 3);
  CHECK(closure_family(l3) ==
        std::set<std::vector<int>>{{}, {0}, {1, 2}, {0, 1, 2}});
}

TEST_CASE("lattice isomorphism across q") {
  const Arrangement a = demo();
  CHECK(lattices_isomorphic(build_lattice(a, 5), build_lattice(a, 11)));
  CHECK_FALSE(lattices_isomorphic(build_lattice(a, 5), build_lattice(a, 8)));
  const IntersectionLattice l7 = build_lattice(a, 7);
  CHECK(lattices_isomorphic(l7, l7));
}

TEST_CASE("periodicity of the demo lattice from q = 4 on") {
  const Arrangement a = demo();
  for (std::int64_t q = 4; q + 6 <= 22; ++q)
    CHECK(lattices_isomorphic(build_lattice(a, q), build_lattice(a, q + 6)));
}

TEST_CASE("verify_periodicity on the demo and a random instance") {
  const Arrangement a = demo();
  const PeriodicityReport rep = verify_periodicity(a, 22);
  CHECK(rep.passed);
  CHECK(rep.violations.empty());
  CHECK(rep.rho0 == Int(6));

  std::mt19937 rng(4242);
  for (int trial = 0; trial < 6; ++trial) {
    const Arrangement r(test::random_arrangement_matrix(rng, 2, 3, -3, 3));
    const Int q0 = q0_bound(r);
    const Int rho = period_rho0(r);
    const Int qmax = q0 + Int(2) * rho;
    const PeriodicityReport rrep = verify_periodicity(r, qmax.to_int64());
    CHECK(rrep.passed);
  }

  CHECK_THROWS_AS(verify_periodicity(a, 1), InputError);
}

TEST_CASE("onset of periodicity is at or below the q0 bound") {
  // around the bound, equal gcd classes give equal closure families for
  // the next two full periods
  const Arrangement a = demo();
  const std::int64_t b = q0_bound(a).to_int64();
  for (std::int64_t q = b + 1; q + 6 <= b + 24; ++q)
    CHECK(lattices_isomorphic(build_lattice(a, q), build_lattice(a, q + 6)));
}

TEST_CASE("coarseness nesting") {
  const Arrangement a = demo();
  const CoarsenessReport ok = coarseness_check(a, 12, 5);
  CHECK(ok.passed);
  CHECK(coarseness_check(a, 12, 8).passed);
  CHECK(coarseness_check(a, 12, 9).passed);
  CHECK(coarseness_check(a, 12, 12).passed);  // q' = q is trivially fine

  // gcd(6,9) = 3 does not divide gcd(6,8) = 2
  CHECK_THROWS_AS(coarseness_check(a, 8, 9), InputError);
}

TEST_CASE("membership agrees with point-set containment") {
  std::mt19937 rng(987);
  for (int trial = 0; trial < 25; ++trial) {
    const IntMatrix c = test::random_arrangement_matrix(rng, 2, 3, -3, 3);
    const Arrangement a(c);
    for (std::int64_t q = 1; q <= 8; ++q) {
      for (int j = 0; j < 3; ++j) {
        for (unsigned mask = 1; mask < 8; ++mask) {
          std::vector<int> cols;
          for (int t = 0; t < 3; ++t)
            if (mask & (1u << t)) cols.push_back(t);
          const PointSet flat = enumerate_flat(select_columns(c, cols), q);
          const PointSet hyper = enumerate_flat(c.col(j), q);
          const bool contained = std::includes(hyper.points.begin(), hyper.points.end(),
                                               flat.points.begin(), flat.points.end());
          CHECK(covers_flat(a, j, cols, q) == contained);
        }
      }
    }
  }
}

TEST_CASE("flats deduplicate exactly by point sets") {
  std::mt19937 rng(135);
  for (int trial = 0; trial < 15; ++trial) {
    const IntMatrix c = test::random_arrangement_matrix(rng, 2, 3, -3, 3);
    const Arrangement a(c);
    for (std::int64_t q = 2; q <= 7; ++q) {
      const auto closures = subset_closures(a, q);
      for (std::size_t x = 0; x < closures.size(); ++x)
        for (std::size_t y = x + 1; y < closures.size(); ++y) {
          std::vector<int> cx, cy;
          for (int t = 0; t < 3; ++t) {
            if ((x + 1) & (1u << t)) cx.push_back(t);
            if ((y + 1) & (1u << t)) cy.push_back(t);
          }
          const bool same_points =
              flats_equal(select_columns(c, cx), select_columns(c, cy), q);
          CHECK(same_points == (closures[x] == closures[y]));
        }
    }
  }
}

TEST_CASE("flat cardinalities match the oracle and share quasi-monomials across a period") {
  const Arrangement a = demo();
  for (std::int64_t q : {5, 8, 9, 12}) {
    const IntersectionLattice l = build_lattice(a, q);
    for (const Flat& f : l.flats) {
      if (f.closure.empty()) continue;
      CHECK(f.cardinality ==
            Int(enumerate_flat(a.column_submatrix(f.closure), q).points.size()));
      CHECK(quasi_monomial(a, f.closure).evaluate(q) == f.cardinality);
      // the divisor expression is the same one period later
      CHECK(quasi_monomial(a, f.closure) == quasi_monomial(a, f.closure));
      const IntersectionLattice next = build_lattice(a, q + 6);
      REQUIRE(find_flat(next, f.closure) != nullptr);
      CHECK(find_flat(next, f.closure)->cardinality ==
            quasi_monomial(a, f.closure).evaluate(q + 6));
    }
  }
}

TEST_CASE("hasse diagrams") {
  const Arrangement a = demo();

  const std::string dot5 = hasse_dot(build_lattice(a, 5));
  CHECK(std::count(dot5.begin(), dot5.end(), '[') - 1 == 5);  // 5 nodes + node [shape=box]
  CHECK(static_cast<int>(std::string::npos) != static_cast<int>(dot5.find("rankdir=BT")));
  std::size_t edges5 = 0;
  for (std::size_t pos = dot5.find("->"); pos != std::string::npos; pos = dot5.find("->", pos + 1))
    ++edges5;
  CHECK(edges5 == 6);

  const std::string dot12 = hasse_dot(build_lattice(a, 12));
  CHECK(std::count(dot12.begin(), dot12.end(), '[') - 1 == 7);

  // a single hyperplane: two nodes, one edge
  const Arrangement single(make_matrix({{1}, {1}}));
  const std::string dot1 = hasse_dot(build_lattice(single, 5));
  CHECK(std::count(dot1.begin(), dot1.end(), '[') - 1 == 2);
  std::size_t edges1 = 0;
  for (std::size_t pos = dot1.find("->"); pos != std::string::npos; pos = dot1.find("->", pos + 1))
    ++edges1;
  CHECK(edges1 == 1);

  CHECK(hasse_dot(build_lattice(a, 12)) == dot12);  // byte-stable
}

TEST_CASE("cover relations are a transitive reduction") {
  const Arrangement a = demo();
  for (std::int64_t q : {2, 5, 12}) {
    const IntersectionLattice l = build_lattice(a, q);
    auto leq = [&](int x, int y) {
      const auto& cx = l.flats[static_cast<std::size_t>(x)].closure;
      const auto& cy = l.flats[static_cast<std::size_t>(y)].closure;
      return cx.size() < cy.size() && std::includes(cy.begin(), cy.end(), cx.begin(), cx.end());
    };
    for (const auto& [lo, hi] : l.covers) {
      CHECK(leq(lo, hi));
      for (std::size_t z = 0; z < l.flats.size(); ++z)
        CHECK_FALSE(leq(lo, static_cast<int>(z)) && leq(static_cast<int>(z), hi));
    }
    // transitive closure of covers equals the full order
    const int f = static_cast<int>(l.flats.size());
    std::vector<std::vector<bool>> reach(f, std::vector<bool>(f, false));
    for (const auto& [lo, hi] : l.covers) reach[lo][hi] = true;
    for (int k = 0; k < f; ++k)
      for (int x = 0; x < f; ++x)
        for (int y = 0; y < f; ++y)
          if (reach[x][k] && reach[k][y]) reach[x][y] = true;
    for (int x = 0; x < f; ++x)
      for (int y = 0; y < f; ++y) CHECK(reach[x][y] == leq(x, y));
  }
}

TEST_CASE("ambient flat keeps the empty generator when a hyperplane collapses onto V") {
  // first column vanishes mod 2, so H_1 = V there
  const Arrangement a(make_matrix({{2, 1}, {0, 1}}));
  const IntersectionLattice l = build_lattice(a, 2);
  REQUIRE(!l.flats.empty());
  CHECK(l.flats[0].closure == std::vector<int>{0});
  CHECK(l.flats[0].generator.empty());
  CHECK(l.flats[0].cardinality == Int(4));
}
