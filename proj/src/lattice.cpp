#include "charq/lattice.hpp"

#include "charq/errors.hpp"
#include "charq/modular.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace charq {

namespace {

void check_full_enumeration_cap(const Arrangement& a, const char* who) {
  const int n = static_cast<int>(a.size());
  if (n > 62 || ((std::uint64_t{1} << n) - 1) > a.max_subsets())
    throw CapError(std::string(who) + ": 2^" + std::to_string(n) +
                   " - 1 subsets exceed the cap of " + std::to_string(a.max_subsets()));
}

std::vector<int> subset_from_mask(std::uint64_t mask) {
  std::vector<int> cols;
  for (int j = 0; mask != 0; ++j, mask >>= 1)
    if (mask & 1u) cols.push_back(j);
  return cols;
}

// All j with c_j == 0 (mod q); exactly the hyperplanes that degenerate to V.
std::vector<int> closure_of_empty(const Arrangement& a, std::int64_t q) {
  const Int qi(q);
  std::vector<int> out;
  for (Index j = 0; j < a.size(); ++j) {
    bool all = true;
    for (Index i = 0; i < a.dimension(); ++i)
      if (!divides(qi, a.matrix()(i, j))) {
        all = false;
        break;
      }
    if (all) out.push_back(static_cast<int>(j));
  }
  return out;
}

std::vector<int> closure_of(const Arrangement& a, const std::vector<int>& subset,
                            std::int64_t q) {
  const auto snf = a.smith_for(subset);
  std::vector<int> out;
  std::size_t next_in = 0;
  for (int j = 0; j < static_cast<int>(a.size()); ++j) {
    if (next_in < subset.size() && subset[next_in] == j) {
      out.push_back(j);  // j in J is contained trivially
      ++next_in;
      continue;
    }
    if (in_column_space_mod_q(*snf, a.matrix().col(j), q)) out.push_back(j);
  }
  return out;
}

struct VectorIntHash {
  std::size_t operator()(const std::vector<int>& k) const {
    return Arrangement::KeyHash{}(k);
  }
};

}  // namespace

std::vector<std::vector<int>> subset_closures(const Arrangement& a, std::int64_t q) {
  if (q < 1) throw InputError("subset_closures: q must be positive");
  check_full_enumeration_cap(a, "subset_closures");
  const std::uint64_t total = (std::uint64_t{1} << a.size()) - 1;
  std::vector<std::vector<int>> out;
  out.reserve(total);
  for (std::uint64_t mask = 1; mask <= total; ++mask)
    out.push_back(closure_of(a, subset_from_mask(mask), q));
  return out;
}

Int q0_bound(const Arrangement& a) {
  check_full_enumeration_cap(a, "q0_bound");
  Int best = max_abs_entry(a.matrix());
  std::unordered_set<std::vector<int>, VectorIntHash> seen;
  const std::uint64_t total = (std::uint64_t{1} << a.size()) - 1;
  for (std::uint64_t mask = 1; mask <= total; ++mask) {
    const std::vector<int> cols = subset_from_mask(mask);
    if (!seen.insert(cols).second) continue;
    const auto snf = a.smith_for(cols);
    const IntMatrix transformed = snf->left * a.matrix();
    Int candidate = max_abs_entry(transformed);
    if (candidate > best) best = std::move(candidate);
  }
  return best;
}

bool covers_flat(const Arrangement& a, int j, const std::vector<int>& subset, std::int64_t q) {
  if (subset.empty()) throw InputError("covers_flat: subset must be nonempty");
  if (j < 0 || j >= a.size()) throw InputError("covers_flat: column index out of range");
  if (std::find(subset.begin(), subset.end(), j) != subset.end()) return true;
  return in_column_space_mod_q(*a.smith_for(subset), a.matrix().col(j), q);
}

IntersectionLattice build_lattice(const Arrangement& a, std::int64_t q) {
  if (q < 1) throw InputError("build_lattice: q must be positive");
  check_full_enumeration_cap(a, "build_lattice");

  IntersectionLattice out;
  out.q = q;

  std::map<std::vector<int>, Flat> by_closure;
  {
    // The ambient space first, so it keeps the empty generator even when
    // some H_{j,q} collapses onto V.
    Flat v;
    v.closure = closure_of_empty(a, q);
    v.cardinality = pow(Int(q), static_cast<unsigned long>(a.dimension()));
    by_closure.emplace(v.closure, std::move(v));
  }

  const std::uint64_t total = (std::uint64_t{1} << a.size()) - 1;
  for (std::uint64_t mask = 1; mask <= total; ++mask) {
    const std::vector<int> cols = subset_from_mask(mask);
    std::vector<int> closure = closure_of(a, cols, q);
    if (by_closure.find(closure) != by_closure.end()) continue;
    Flat f;
    f.cardinality = kernel_cardinality(*a.smith_for(closure), a.dimension(), q);
    f.generator = cols;
    f.closure = closure;
    by_closure.emplace(std::move(closure), std::move(f));
  }

  for (auto& [closure, flat] : by_closure) out.flats.push_back(std::move(flat));
  std::sort(out.flats.begin(), out.flats.end(), [](const Flat& x, const Flat& y) {
    if (x.closure.size() != y.closure.size()) return x.closure.size() < y.closure.size();
    return x.closure < y.closure;
  });

  // Cover relations by pairwise inclusion, then transitive reduction.
  const int f = static_cast<int>(out.flats.size());
  std::vector<std::vector<bool>> below(f, std::vector<bool>(f, false));
  for (int x = 0; x < f; ++x)
    for (int y = 0; y < f; ++y) {
      if (x == y) continue;
      const auto& cx = out.flats[x].closure;
      const auto& cy = out.flats[y].closure;
      below[x][y] = cx.size() < cy.size() &&
                    std::includes(cy.begin(), cy.end(), cx.begin(), cx.end());
    }
  for (int x = 0; x < f; ++x)
    for (int y = 0; y < f; ++y) {
      if (!below[x][y]) continue;
      bool direct = true;
      for (int z = 0; z < f && direct; ++z)
        if (below[x][z] && below[z][y]) direct = false;
      if (direct) out.covers.emplace_back(x, y);
    }
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

bool lattices_isomorphic(const IntersectionLattice& l1, const IntersectionLattice& l2) {
  if (l1.flats.size() != l2.flats.size()) return false;
  for (std::size_t i = 0; i < l1.flats.size(); ++i)
    if (l1.flats[i].closure != l2.flats[i].closure) return false;
  return true;
}

namespace {

std::string closure_label(const std::vector<int>& closure) {
  if (closure.empty()) return "V";
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < closure.size(); ++i) {
    if (i > 0) os << ',';
    os << closure[i] + 1;  // 1-based for display
  }
  os << '}';
  return os.str();
}

}  // namespace

std::string hasse_dot(const IntersectionLattice& l) {
  std::ostringstream os;
  os << "digraph intersection_lattice {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < l.flats.size(); ++i) {
    os << "  n" << i << " [label=\"" << closure_label(l.flats[i].closure) << "\\n"
       << l.flats[i].cardinality << " point" << (l.flats[i].cardinality == Int(1) ? "" : "s")
       << "\"];\n";
  }
  for (const auto& [lo, hi] : l.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

PeriodicityReport verify_periodicity(const Arrangement& a, std::int64_t q_max) {
  PeriodicityReport report;
  report.q0 = q0_bound(a);
  report.rho0 = period_rho0(a);
  if (Int(q_max) <= report.q0)
    throw InputError("verify_periodicity: q_max must exceed the q0 bound " + report.q0.str());

  report.q_low = report.q0.to_int64() + 1;
  report.q_high = q_max;

  // gcd class -> (first q seen, its closure family)
  std::map<Int, std::pair<std::int64_t, std::vector<std::vector<int>>>> families;
  for (std::int64_t q = report.q_low; q <= q_max; ++q) {
    const IntersectionLattice lat = build_lattice(a, q);
    std::vector<std::vector<int>> family;
    family.reserve(lat.flats.size());
    for (const Flat& f : lat.flats) family.push_back(f.closure);
    const Int cls = gcd(report.rho0, Int(q));
    auto it = families.find(cls);
    if (it == families.end()) {
      families.emplace(cls, std::make_pair(q, std::move(family)));
      continue;
    }
    if (it->second.second != family) {
      report.passed = false;
      std::ostringstream os;
      os << "closure families differ for q = " << it->second.first << " and q = " << q
         << " (gcd class " << cls << ")";
      report.violations.push_back(os.str());
    }
  }
  return report;
}

CoarsenessReport coarseness_check(const Arrangement& a, std::int64_t q, std::int64_t q_prime) {
  CoarsenessReport report;
  report.q = q;
  report.q_prime = q_prime;

  const Int bound = q0_bound(a);
  if (Int(q) <= bound || Int(q_prime) <= bound)
    throw InputError("coarseness_check: both q and q' must exceed the q0 bound " + bound.str());
  const Int rho0 = period_rho0(a);
  if (!divides(gcd(rho0, Int(q_prime)), gcd(rho0, Int(q))))
    throw InputError("coarseness_check: gcd(rho_0, q') = " + gcd(rho0, Int(q_prime)).str() +
                     " does not divide gcd(rho_0, q) = " + gcd(rho0, Int(q)).str());

  const auto at_q = subset_closures(a, q);
  const auto at_qp = subset_closures(a, q_prime);

  // Group subsets by their flat at q; each group must stay identified at q'.
  auto subset_text = [](std::uint64_t mask) {
    const std::vector<int> cols = subset_from_mask(mask);
    std::ostringstream os;
    os << '{';
    for (std::size_t t = 0; t < cols.size(); ++t) os << (t ? "," : "") << cols[t] + 1;
    os << '}';
    return os.str();
  };
  std::map<std::vector<int>, std::uint64_t> first_in_group;
  for (std::size_t i = 0; i < at_q.size(); ++i) {
    const std::uint64_t mask = i + 1;
    auto [it, inserted] = first_in_group.emplace(at_q[i], mask);
    if (inserted) continue;
    const std::uint64_t lead = it->second;
    if (at_qp[i] != at_qp[lead - 1]) {
      report.passed = false;
      report.violations.push_back("subsets " + subset_text(lead) + " and " + subset_text(mask) +
                                  " are identified at q = " + std::to_string(q) +
                                  " but not at q' = " + std::to_string(q_prime));
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

}  // namespace charq
