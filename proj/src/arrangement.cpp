#include "charq/arrangement.hpp"

#include "charq/errors.hpp"
#include "charq/modular.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>
#include <utility>

namespace charq {

namespace {

// SmithData entries are kept verbatim; past this many distinct subsets the
// cache stops growing and further forms are recomputed on demand.
constexpr std::size_t kSmithCacheLimit = std::size_t{1} << 18;

}  // namespace

Int QuasiMonomial::evaluate(std::int64_t q) const {
  if (q < 1) throw InputError("QuasiMonomial::evaluate: q must be positive");
  const Int qi(q);
  Int out = pow(qi, static_cast<unsigned long>(degree));
  for (const Int& e : divisors) out *= gcd(e, qi);
  return out;
}

Arrangement::Arrangement(IntMatrix c, std::uint64_t max_subsets)
    : c_(std::move(c)), max_subsets_(max_subsets) {
  if (c_.rows() < 1 || c_.cols() < 1)
    throw InputError("arrangement: matrix must have at least one row and one column");
  for (Index j = 0; j < c_.cols(); ++j) {
    bool zero = true;
    for (Index i = 0; i < c_.rows(); ++i)
      if (!c_(i, j).is_zero()) {
        zero = false;
        break;
      }
    if (zero) throw InputError("arrangement: column " + std::to_string(j + 1) + " is zero");
  }
  column_class_.resize(static_cast<std::size_t>(c_.cols()));
  for (Index j = 0; j < c_.cols(); ++j) {
    int cls = static_cast<int>(j);
    for (Index p = 0; p < j; ++p)
      if (c_.col(p) == c_.col(j)) {
        cls = static_cast<int>(p);
        break;
      }
    column_class_[static_cast<std::size_t>(j)] = cls;
  }
}

std::size_t Arrangement::KeyHash::operator()(const std::vector<int>& k) const {
  std::uint64_t h = 1469598103934665603ull;
  for (int v : k) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::vector<int> Arrangement::canonical_key(const std::vector<int>& cols) const {
  std::vector<int> key;
  key.reserve(cols.size());
  for (int j : cols) {
    if (j < 0 || j >= c_.cols()) throw InputError("subset: column index out of range");
    key.push_back(column_class_[static_cast<std::size_t>(j)]);
  }
  std::sort(key.begin(), key.end());
  return key;
}

std::shared_ptr<const SmithData> Arrangement::smith_for(const std::vector<int>& cols) const {
  if (cols.empty()) throw InputError("smith_for: subset must be nonempty");
  std::vector<int> key = canonical_key(cols);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  // Compute outside the lock; a concurrent duplicate produces the identical
  // value and the first insert wins.
  auto snf = std::make_shared<const SmithData>(smith_normal_form(select_columns(c_, key)));
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (cache_.size() >= kSmithCacheLimit) {
    auto it = cache_.find(key);
    return it != cache_.end() ? it->second : snf;
  }
  return cache_.emplace(std::move(key), std::move(snf)).first->second;
}

std::size_t Arrangement::cache_size() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return cache_.size();
}

namespace {

std::vector<int> subset_from_mask(std::uint64_t mask) {
  std::vector<int> cols;
  for (int j = 0; mask != 0; ++j, mask >>= 1)
    if (mask & 1u) cols.push_back(j);
  return cols;
}

void check_distinct_subset(const Arrangement& a, const std::vector<int>& subset) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw InputError("subset: repeated column index");
  if (!s.empty() && (s.front() < 0 || s.back() >= a.size()))
    throw InputError("subset: column index out of range");
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

// Number of nonempty subsets of size <= kmax out of n, saturating at limit.
std::uint64_t subset_count_capped(int n, int kmax, std::uint64_t limit) {
  Int total(0);
  const Int lim(static_cast<long long>(limit));
  Int binom(1);
  for (int s = 1; s <= kmax; ++s) {
    binom *= Int(n - s + 1);
    binom /= Int(s);
    total += binom;
    if (total > lim) return limit + 1;
  }
  return static_cast<std::uint64_t>(total.to_int64());
}

}  // namespace

Int flat_cardinality(const Arrangement& a, const std::vector<int>& subset, std::int64_t q) {
  if (subset.empty())
    throw InputError("flat_cardinality: subset must be nonempty (H_empty = V has q^m points)");
  check_distinct_subset(a, subset);
  return kernel_cardinality(*a.smith_for(subset), a.dimension(), q);
}

QuasiMonomial quasi_monomial(const Arrangement& a, const std::vector<int>& subset) {
  if (subset.empty()) throw InputError("quasi_monomial: subset must be nonempty");
  check_distinct_subset(a, subset);
  const auto snf = a.smith_for(subset);
  return QuasiMonomial{a.dimension() - snf->rank, snf->divisors};
}

Int period_rho0(const Arrangement& a) {
  const int n = static_cast<int>(a.size());
  const int kmax = static_cast<int>(std::min(a.dimension(), a.size()));
  if (subset_count_capped(n, kmax, a.max_subsets()) > a.max_subsets())
    throw CapError("period_rho0: subset enumeration exceeds the cap of " +
                   std::to_string(a.max_subsets()));
  Int acc(1);
  for (int s = 1; s <= kmax; ++s) {
    std::vector<int> cols(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) cols[static_cast<std::size_t>(i)] = i;
    do {
      acc = lcm(acc, a.smith_for(cols)->largest_divisor());
    } while (next_combination(cols, n));
  }
  return acc;
}

Int period_rhoE(const Arrangement& a) {
  Int rho_e = nonzero_minors_lcm(a.matrix(), a.max_subsets());
  if (!divides(period_rho0(a), rho_e))
    throw std::logic_error("period_rhoE: rho_0 does not divide rho_E");
  return rho_e;
}

std::vector<Int> divisors_of(const Int& x) {
  if (x.sign() <= 0) throw InputError("divisors_of: argument must be positive");
  std::vector<std::pair<Int, int>> factors;
  Int n = x;
  auto strip = [&](const Int& p) {
    int e = 0;
    while (divides(p, n)) {
      n = divexact(n, p);
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  };
  strip(Int(2));
  for (long d = 3; d <= 1000000 && Int(d) * Int(d) <= n; d += 2) strip(Int(d));
  if (n > 1) {
    if (probably_prime(n)) {
      factors.emplace_back(n, 1);
    } else if (mpz_perfect_square_p(n.raw())) {
      Int s;
      mpz_sqrt(s.raw(), n.raw());
      if (!probably_prime(s)) throw CapError("divisors_of: cannot factor " + x.str());
      factors.emplace_back(s, 2);
    } else {
      throw CapError("divisors_of: cannot factor " + x.str());
    }
  }

  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    Int pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

CharQuasiPolynomial char_quasi_poly(const Arrangement& a, unsigned threads) {
  const int n = static_cast<int>(a.size());
  const Index m = a.dimension();
  if (n > 62 || ((std::uint64_t{1} << n) - 1) > a.max_subsets())
    throw CapError("char_quasi_poly: 2^" + std::to_string(n) + " - 1 subsets exceed the cap of " +
                   std::to_string(a.max_subsets()));

  const Int rho0 = period_rho0(a);
  const std::vector<Int> divs = divisors_of(rho0);
  const std::size_t nd = divs.size();

  const std::uint64_t total = (std::uint64_t{1} << n) - 1;
  using Accum = std::vector<std::vector<Int>>;  // [divisor][degree]
  auto fresh_accum = [&] {
    return Accum(nd, std::vector<Int>(static_cast<std::size_t>(m), Int(0)));
  };

  // One inclusion-exclusion term per subset: (-1)^|J| * prod_j gcd(e_j, d)
  // at degree m - rank(C_J), collected separately for every gcd class d.
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Accum& acc) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const auto snf = a.smith_for(subset_from_mask(mask));
      const std::size_t degree = static_cast<std::size_t>(m - snf->rank);
      const bool negative = (std::popcount(mask) % 2) == 1;
      for (std::size_t di = 0; di < nd; ++di) {
        Int prod(1);
        for (const Int& e : snf->divisors) prod *= gcd(e, divs[di]);
        if (negative)
          acc[di][degree] -= prod;
        else
          acc[di][degree] += prod;
      }
    }
  };

  Accum acc = fresh_accum();
  const unsigned t = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total)));
  if (t == 1) {
    run_range(1, total + 1, acc);
  } else {
    const std::uint64_t chunk = total / t;
    const std::uint64_t rem = total % t;
    std::vector<Accum> partial(t, fresh_accum());
    std::vector<std::thread> workers;
    std::uint64_t lo = 1;
    for (unsigned w = 0; w < t; ++w) {
      const std::uint64_t hi = lo + chunk + (w < rem ? 1 : 0);
      workers.emplace_back([&, w, lo, hi] { run_range(lo, hi, partial[w]); });
      lo = hi;
    }
    for (auto& th : workers) th.join();
    for (unsigned w = 0; w < t; ++w)
      for (std::size_t di = 0; di < nd; ++di)
        for (std::size_t deg = 0; deg < static_cast<std::size_t>(m); ++deg)
          acc[di][deg] += partial[w][di][deg];
  }

  CharQuasiPolynomial out;
  out.dimension = m;
  out.period = rho0;
  for (std::size_t di = 0; di < nd; ++di) out.constituents.emplace(divs[di], std::move(acc[di]));
  return out;
}

Int evaluate(const CharQuasiPolynomial& p, std::int64_t q) {
  if (q < 1) throw InputError("evaluate: q must be positive");
  const Int cls = gcd(p.period, Int(q));
  auto it = p.constituents.find(cls);
  if (it == p.constituents.end())
    throw InputError("evaluate: no constituent for gcd class " + cls.str());
  const std::vector<Int>& alpha = it->second;
  const Int qi(q);
  Int acc(1);  // monic
  for (std::size_t i = alpha.size(); i-- > 0;) acc = acc * qi + alpha[i];
  return acc;
}

Int minimum_period(const CharQuasiPolynomial& p) {
  // A divisor d of the stored period is itself a period iff constituents
  // agree on every pair of gcd classes with the same gcd with d.
  for (const Int& cand : divisors_of(p.period)) {
    std::map<Int, const std::vector<Int>*> rep;
    bool ok = true;
    for (const auto& [d, coeffs] : p.constituents) {
      const Int g = gcd(d, cand);
      auto [it, inserted] = rep.emplace(g, &coeffs);
      if (!inserted && *it->second != coeffs) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  return p.period;  // unreachable: the full period always qualifies
}

namespace {

// Lagrange interpolation in coefficient space, exact rationals.
std::vector<Rat> lagrange_fit(const std::vector<std::int64_t>& xs, const std::vector<Int>& ys) {
  const std::size_t k = xs.size();
  std::vector<Rat> acc(k, Rat(Int(0)));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rat> basis{Rat(Int(1))};
    Rat denom(Int(1));
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(basis.size() + 1, Rat(Int(0)));
      const Rat minus_xj(Int(-xs[j]));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] += basis[d] * minus_xj;
      }
      basis = std::move(next);
      denom *= Rat(Int(xs[i] - xs[j]));
    }
    const Rat scale = Rat(ys[i]) / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += basis[d] * scale;
  }
  return acc;
}

}  // namespace

std::vector<Int> interpolate_chi(const Arrangement& a, const std::vector<std::int64_t>& points,
                                 std::uint64_t budget, unsigned threads) {
  const Index m = a.dimension();
  const std::size_t k = points.size();
  if (k != static_cast<std::size_t>(m) && k != static_cast<std::size_t>(m) + 1)
    throw InputError("interpolate_chi: need m or m+1 sample points");
  const Int rho0 = period_rho0(a);
  for (std::size_t i = 0; i < k; ++i) {
    if (points[i] < 1) throw InputError("interpolate_chi: sample points must be positive");
    if (gcd(rho0, Int(points[i])) != Int(1))
      throw InputError("interpolate_chi: q = " + std::to_string(points[i]) +
                       " is not coprime to the period " + rho0.str());
    for (std::size_t j = i + 1; j < k; ++j)
      if (points[i] == points[j]) throw InputError("interpolate_chi: repeated sample point");
  }

  std::vector<Int> ys;
  ys.reserve(k);
  for (std::int64_t q : points) {
    Int y(count_complement(a.matrix(), q, budget, threads));
    if (k == static_cast<std::size_t>(m))
      y -= pow(Int(q), static_cast<unsigned long>(m));  // peel off the monic term
    ys.push_back(std::move(y));
  }

  const std::vector<Rat> fit = lagrange_fit(points, ys);
  std::vector<Int> out(static_cast<std::size_t>(m) + 1, Int(0));
  out[static_cast<std::size_t>(m)] = Int(1);
  for (std::size_t d = 0; d < fit.size(); ++d) {
    if (!fit[d].is_integer())
      throw std::logic_error("interpolate_chi: non-integral coefficient " + fit[d].num().str() +
                             "/" + fit[d].den().str());
    if (d == static_cast<std::size_t>(m)) {
      if (fit[d].num() != Int(1))
        throw std::logic_error("interpolate_chi: interpolant is not monic");
    } else {
      out[d] = fit[d].num();
    }
  }
  return out;
}

std::vector<Int> characteristic_polynomial(const Arrangement& a, const ChiOptions& opts) {
  const CharQuasiPolynomial p = char_quasi_poly(a, opts.threads);
  std::vector<Int> chi = p.constituents.at(Int(1));
  chi.push_back(Int(1));

  if (opts.cross_check) {
    std::vector<std::int64_t> points;
    for (std::int64_t q = 1; static_cast<Index>(points.size()) < a.dimension() + 1; ++q)
      if (gcd(p.period, Int(q)) == Int(1)) points.push_back(q);
    const std::vector<Int> interp = interpolate_chi(a, points, opts.budget, opts.threads);
    if (interp != chi)
      throw std::logic_error(
          "characteristic_polynomial: interpolation cross-check disagrees with the assembled "
          "constituent");
  }
  return chi;
}

}  // namespace charq
