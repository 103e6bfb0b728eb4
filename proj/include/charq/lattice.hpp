#pragma once

// Mod-q intersection lattices: flats canonicalized by their closure set,
// the periodicity threshold bound q0, isomorphism across q, coarseness
// nesting, and DOT export.

#include "charq/arrangement.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace charq {

// One flat H_{J,q}. Two subsets define the same flat exactly when their
// closures coincide, so the closure is the canonical label.
struct Flat {
  std::vector<int> closure;    // all j with H_{j,q} >= H_{J,q}; sorted, 0-based
  Int cardinality;             // |H_{J,q}|
  std::vector<int> generator;  // one witnessing subset; empty for V

  bool operator==(const Flat&) const = default;
};

struct IntersectionLattice {
  std::int64_t q = 1;
  // Ordered by (closure size, closure lex); the ambient space V comes
  // first and is the minimum of the order (reverse inclusion of point
  // sets == forward inclusion of closures).
  std::vector<Flat> flats;
  // Cover relations as (lower, upper) indices into flats, transitively
  // reduced, sorted.
  std::vector<std::pair<int, int>> covers;
};

// Upper bound for the periodicity threshold: the largest |entry| of C or
// of S_J * C over all nonempty J, computed with this implementation's own
// left transforms. Every statement quoted for q > q0 holds for q above
// this bound.
Int q0_bound(const Arrangement& a);

// Closure of every nonempty subset at q, indexed by bitmask - 1 (bit j of
// the mask selects column j).
std::vector<std::vector<int>> subset_closures(const Arrangement& a, std::int64_t q);

/// True iff H_{j,q} contains H_{J,q}, i.e. [c_j]_q lies in the column
/// space of [C_J]_q.
bool covers_flat(const Arrangement& a, int j, const std::vector<int>& subset, std::int64_t q);

IntersectionLattice build_lattice(const Arrangement& a, std::int64_t q);

// Closure-labelled isomorphism: the closure families coincide as sets.
bool lattices_isomorphic(const IntersectionLattice& l1, const IntersectionLattice& l2);

// Deterministic DOT digraph; nodes carry closure and cardinality, edges
// run bottom-to-top with V at the bottom.
std::string hasse_dot(const IntersectionLattice& l);

struct PeriodicityReport {
  Int q0;
  Int rho0;
  std::int64_t q_low = 0;   // first q checked (q0_bound + 1)
  std::int64_t q_high = 0;  // last q checked
  bool passed = true;
  std::vector<std::string> violations;
};

// Checks that all q, q' in (q0_bound, q_max] with equal gcd(rho_0, .)
// produce identical closure families. Violations indicate an
// implementation bug, never expected behavior.
PeriodicityReport verify_periodicity(const Arrangement& a, std::int64_t q_max);

struct CoarsenessReport {
  std::int64_t q = 0;
  std::int64_t q_prime = 0;
  bool passed = true;
  std::vector<std::string> violations;
};

// Requires q, q' > q0_bound and gcd(rho_0, q') | gcd(rho_0, q); every pair
// of subsets identified in L_q must also be identified in L_{q'}.
CoarsenessReport coarseness_check(const Arrangement& a, std::int64_t q, std::int64_t q_prime);

}  // namespace charq
