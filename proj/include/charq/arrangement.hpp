#pragma once

// A central arrangement given by an integer coefficient matrix C, its
// characteristic quasi-polynomial q -> |Z_q^m \ union of hyperplanes|,
// the periods rho_0 and rho_E, and the characteristic polynomial of the
// real arrangement.

#include "charq/matrix.hpp"
#include "charq/minors.hpp"
#include "charq/oracle.hpp"
#include "charq/smith.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace charq {

// One intersection's point count as a function of q:
// evaluate(q) = (prod_j gcd(divisors[j], q)) * q^degree.
struct QuasiMonomial {
  Index degree = 0;
  std::vector<Int> divisors;

  Int evaluate(std::int64_t q) const;

  bool operator==(const QuasiMonomial&) const = default;
};

// The counting function q -> |M(A_q)| as one monic integer polynomial per
// divisor of the period: the constituent used at q is the one keyed by
// gcd(period, q).
struct CharQuasiPolynomial {
  Index dimension = 0;
  Int period = 1;
  // divisor of period -> (alpha_0, ..., alpha_{m-1}); leading coefficient
  // of q^m is implicitly 1.
  std::map<Int, std::vector<Int>> constituents;

  bool operator==(const CharQuasiPolynomial&) const = default;
};

class Arrangement {
 public:
  // Rejects empty matrices and zero columns (the error names the
  // offending 1-based column).
  explicit Arrangement(IntMatrix c, std::uint64_t max_subsets = kDefaultMaxSubsets);

  Index dimension() const { return c_.rows(); }  // m
  Index size() const { return c_.cols(); }       // n
  const IntMatrix& matrix() const { return c_; }
  std::uint64_t max_subsets() const { return max_subsets_; }

  IntMatrix column_submatrix(const std::vector<int>& cols) const {
    return select_columns(c_, cols);
  }

  // Memoized Smith data for C_J, keyed by the column multiset, so subsets
  // with identical columns share one entry. The returned data describes
  // the subset's columns in canonical order; rank, divisors and the left
  // transform are what callers rely on, and those do not depend on column
  // order. Safe to call concurrently.
  std::shared_ptr<const SmithData> smith_for(const std::vector<int>& cols) const;

  // Number of distinct cached Smith forms (diagnostic).
  std::size_t cache_size() const;

  struct KeyHash {
    std::size_t operator()(const std::vector<int>& k) const;
  };

 private:
  std::vector<int> canonical_key(const std::vector<int>& cols) const;

  IntMatrix c_;
  std::uint64_t max_subsets_;
  std::vector<int> column_class_;  // column -> index of first equal column

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::vector<int>, std::shared_ptr<const SmithData>, KeyHash> cache_;
};

/// |H_{J,q}| for a nonempty column subset J (0-based indices).
Int flat_cardinality(const Arrangement& a, const std::vector<int>& subset, std::int64_t q);

/// Degree and divisor list of |H_{J,q}| as a function of q.
QuasiMonomial quasi_monomial(const Arrangement& a, const std::vector<int>& subset);

// lcm of the largest elementary divisor e(J) over nonempty J with
// |J| <= min(m, n); a period of the counting function.
Int period_rho0(const Arrangement& a);

// lcm of all nonzero minors of C; rho_0 always divides it.
Int period_rhoE(const Arrangement& a);

// Assembles the quasi-polynomial exactly: for each divisor d of rho_0 the
// inclusion-exclusion sum over all nonempty subsets is collected in powers
// of q with gcd(e, q) replaced by gcd(e, d).
CharQuasiPolynomial char_quasi_poly(const Arrangement& a, unsigned threads = 1);

Int evaluate(const CharQuasiPolynomial& p, std::int64_t q);

// Smallest divisor p of the stored period such that shifting q by p never
// changes the selected constituent.
Int minimum_period(const CharQuasiPolynomial& p);

// Sorted positive divisors of x > 0.
std::vector<Int> divisors_of(const Int& x);

struct ChiOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  bool cross_check = true;  // interpolate through brute-force counts
};

// chi(A, t), ascending coefficients with leading 1 (size m + 1). Equals the
// constituent for gcd class 1; when cross_check is set it is re-derived by
// exact interpolation through m + 1 brute-force counts at q coprime to
// rho_0 and the two must match.
std::vector<Int> characteristic_polynomial(const Arrangement& a, const ChiOptions& opts = {});

// Monic degree-m polynomial through brute-force counts at the given q's
// (all coprime to rho_0). Accepts m points (monic fit) or m + 1 points
// (full fit, monicity checked). Coefficients must come out integral.
std::vector<Int> interpolate_chi(const Arrangement& a, const std::vector<std::int64_t>& points,
                                 std::uint64_t budget = kDefaultBudget, unsigned threads = 1);

}  // namespace charq
