#include "charq/verify.hpp"

#include "charq/errors.hpp"
#include "charq/lattice.hpp"
#include "charq/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace charq {

namespace {

// Largest q with q^m * n within budget: floor((budget / n)^(1/m)).
std::int64_t oracle_limit(const Arrangement& a, std::uint64_t budget) {
  const std::uint64_t per_point = static_cast<std::uint64_t>(a.size());
  if (budget < per_point) return 0;
  const Int base(static_cast<long long>(budget / per_point));
  Int root;
  mpz_root(root.raw(), base.raw(), static_cast<unsigned long>(a.dimension()));
  return root.to_int64();
}

CheckResult check_oracle_equivalence(const Arrangement& a, const CharQuasiPolynomial& p,
                                     std::int64_t q_max, const VerifyOptions& opts) {
  CheckResult out;
  out.name = "oracle-equivalence";
  const std::int64_t q_hi = std::min(q_max, oracle_limit(a, opts.budget));
  if (q_hi < 1) {
    out.skipped = true;
    out.detail = "budget too small for any brute-force count";
    return out;
  }
  for (std::int64_t q = 1; q <= q_hi; ++q) {
    const Int formula = evaluate(p, q);
    const Int brute(count_complement(a.matrix(), q, opts.budget, opts.threads));
    if (formula != brute) {
      out.passed = false;
      std::ostringstream os;
      os << "counterexample q = " << q << ": quasi-polynomial gives " << formula
         << ", enumeration gives " << brute;
      out.detail = os.str();
      return out;
    }
  }
  std::ostringstream os;
  os << "q = 1.." << q_hi;
  if (q_hi < q_max) os << " (budget-limited below q_max = " << q_max << ")";
  out.detail = os.str();
  return out;
}

CheckResult check_period_divisibility(const Arrangement& a) {
  CheckResult out;
  out.name = "period-divisibility";
  const Int rho0 = period_rho0(a);
  const Int rho_e = period_rhoE(a);
  if (!divides(rho0, rho_e)) {
    out.passed = false;
    out.detail = "rho_0 = " + rho0.str() + " does not divide rho_E = " + rho_e.str();
  } else {
    out.detail = "rho_0 = " + rho0.str() + " divides rho_E = " + rho_e.str();
  }
  return out;
}

CheckResult check_lattice_periodicity(const Arrangement& a, std::int64_t q_max, const Int& q0) {
  CheckResult out;
  out.name = "lattice-periodicity";
  if (Int(q_max) <= q0) {
    out.skipped = true;
    out.detail = "q_max = " + std::to_string(q_max) + " does not exceed the q0 bound " + q0.str();
    return out;
  }
  const PeriodicityReport rep = verify_periodicity(a, q_max);
  out.passed = rep.passed;
  if (rep.passed) {
    std::ostringstream os;
    os << "q = " << rep.q_low << ".." << rep.q_high << ", period " << rep.rho0;
    out.detail = os.str();
  } else {
    out.detail = rep.violations.front();
  }
  return out;
}

CheckResult check_coarseness(const Arrangement& a, std::int64_t q_max, const Int& q0,
                             const Int& rho0) {
  CheckResult out;
  out.name = "coarseness-nesting";
  if (Int(q_max) <= q0 + Int(1)) {
    out.skipped = true;
    out.detail = "needs at least two q values above the q0 bound " + q0.str();
    return out;
  }
  const std::int64_t lo = q0.to_int64() + 1;

  // Dense block ids per q: subsets in the same block define the same flat.
  std::vector<std::vector<int>> blocks;
  for (std::int64_t q = lo; q <= q_max; ++q) {
    const auto closures = subset_closures(a, q);
    std::map<std::vector<int>, int> ids;
    std::vector<int> b(closures.size());
    for (std::size_t i = 0; i < closures.size(); ++i)
      b[i] = ids.emplace(closures[i], static_cast<int>(ids.size())).first->second;
    blocks.push_back(std::move(b));
  }

  const std::size_t nsub = blocks.front().size();
  for (std::int64_t q = lo; q <= q_max; ++q)
    for (std::int64_t qp = lo; qp <= q_max; ++qp) {
      if (q == qp) continue;
      if (!divides(gcd(rho0, Int(qp)), gcd(rho0, Int(q)))) continue;
      const auto& bq = blocks[static_cast<std::size_t>(q - lo)];
      const auto& bqp = blocks[static_cast<std::size_t>(qp - lo)];
      // identified at q -> identified at q': each q-block maps into one
      // q'-block.
      std::vector<int> image(nsub, -1);
      for (std::size_t i = 0; i < nsub; ++i) {
        int& img = image[static_cast<std::size_t>(bq[i])];
        if (img < 0) {
          img = bqp[i];
        } else if (img != bqp[i]) {
          out.passed = false;
          std::ostringstream os;
          os << "flats identified at q = " << q << " split at q' = " << qp
             << " (gcd classes " << gcd(rho0, Int(q)) << " and " << gcd(rho0, Int(qp)) << ")";
          out.detail = os.str();
          return out;
        }
      }
    }
  std::ostringstream os;
  os << "all divisibility-compatible pairs in q = " << lo << ".." << q_max;
  out.detail = os.str();
  return out;
}

}  // namespace

VerifyReport run_verification(const Arrangement& a, std::int64_t q_max,
                              const VerifyOptions& opts) {
  if (q_max < 1) throw InputError("run_verification: q_max must be positive");
  VerifyReport report;
  report.q0 = q0_bound(a);
  report.rho0 = period_rho0(a);

  const CharQuasiPolynomial p =
      opts.poly_override ? *opts.poly_override : char_quasi_poly(a, opts.threads);

  report.checks.push_back(check_oracle_equivalence(a, p, q_max, opts));
  report.checks.push_back(check_period_divisibility(a));
  report.checks.push_back(check_lattice_periodicity(a, q_max, report.q0));
  report.checks.push_back(check_coarseness(a, q_max, report.q0, report.rho0));
  return report;
}

}  // namespace charq
