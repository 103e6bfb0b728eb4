#include "charq/serialize.hpp"

#include "charq/errors.hpp"

#include <algorithm>
#include <sstream>

namespace charq {

std::string matrix_digest(const IntMatrix& m) {
  const std::string text = format_matrix(m);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xf);
  return os.str();
}

std::string polynomial_text(const std::vector<Int>& ascending, char var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = ascending.size(); i-- > 0;) {
    const Int& c = ascending[i];
    if (c.is_zero()) continue;
    const Int mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != Int(1)) os << mag;
    if (i >= 1) {
      os << var;
      if (i >= 2) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

namespace {

// Divides a monic ascending polynomial by (var - root); the division must
// be exact.
std::vector<Int> deflate(const std::vector<Int>& poly, const Int& root) {
  const std::size_t d = poly.size() - 1;
  std::vector<Int> out(d);
  Int carry = poly[d];
  for (std::size_t i = d; i-- > 0;) {
    out[i] = carry;
    carry = poly[i] + root * carry;
  }
  if (!carry.is_zero()) throw std::logic_error("deflate: not a root");
  return out;
}

Int eval_poly(const std::vector<Int>& poly, const Int& x) {
  Int acc(0);
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

}  // namespace

std::string factored_text(const std::vector<Int>& ascending, char var) {
  if (ascending.size() < 2) return {};
  std::vector<Int> poly = ascending;
  std::vector<Int> roots;
  while (poly.size() > 1) {
    if (poly[0].is_zero()) {
      roots.push_back(Int(0));
      poly = deflate(poly, Int(0));
      continue;
    }
    bool found = false;
    for (const Int& d : divisors_of(abs(poly[0]))) {
      for (const Int& cand : {d, -d}) {
        if (eval_poly(poly, cand).is_zero()) {
          roots.push_back(cand);
          poly = deflate(poly, cand);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }
  if (roots.empty()) return {};

  std::sort(roots.begin(), roots.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < roots.size();) {
    std::size_t j = i;
    while (j < roots.size() && roots[j] == roots[i]) ++j;
    const std::size_t mult = j - i;
    if (roots[i].is_zero())
      os << var;
    else if (roots[i].sign() > 0)
      os << '(' << var << " - " << roots[i] << ')';
    else
      os << '(' << var << " + " << abs(roots[i]) << ')';
    if (mult > 1) os << '^' << mult;
    i = j;
  }
  if (poly.size() > 1) os << '(' << polynomial_text(poly, var) << ')';
  return os.str();
}

namespace {

Json coeff_array(const std::vector<Int>& ascending) {
  Json arr = Json::array();
  for (const Int& c : ascending) arr.push_back(c.str());
  return arr;
}

std::vector<Int> coeffs_from(const Json& arr) {
  std::vector<Int> out;
  for (const auto& c : arr) out.push_back(Int(c.get<std::string>()));
  return out;
}

Json index_array_1based(const std::vector<int>& idx) {
  Json arr = Json::array();
  for (int j : idx) arr.push_back(j + 1);
  return arr;
}

std::vector<int> index_array_0based(const Json& arr) {
  std::vector<int> out;
  for (const auto& j : arr) out.push_back(j.get<int>() - 1);
  return out;
}

}  // namespace

Json quasipoly_payload(const CharQuasiPolynomial& p, const Int& rho_e, const Int& min_period) {
  Json payload;
  payload["dimension"] = p.dimension;
  payload["rho0"] = p.period.str();
  payload["rhoE"] = rho_e.str();
  payload["minimum_period"] = min_period.str();
  Json cons = Json::array();
  for (const auto& [d, alpha] : p.constituents) {
    std::vector<Int> full = alpha;
    full.push_back(Int(1));
    Json one;
    one["gcd_class"] = d.str();
    one["coefficients"] = coeff_array(full);
    one["text"] = polynomial_text(full, 'q');
    cons.push_back(std::move(one));
  }
  payload["constituents"] = std::move(cons);
  return payload;
}

CharQuasiPolynomial quasipoly_from_payload(const Json& payload) {
  CharQuasiPolynomial p;
  p.dimension = payload.at("dimension").get<Index>();
  p.period = Int(payload.at("rho0").get<std::string>());
  for (const auto& one : payload.at("constituents")) {
    std::vector<Int> full = coeffs_from(one.at("coefficients"));
    if (full.empty() || full.back() != Int(1))
      throw ParseError("quasipoly payload: constituent is not monic");
    if (static_cast<Index>(full.size()) != p.dimension + 1)
      throw ParseError("quasipoly payload: constituent degree does not match dimension");
    full.pop_back();
    p.constituents.emplace(Int(one.at("gcd_class").get<std::string>()), std::move(full));
  }
  return p;
}

Json lattice_payload(const IntersectionLattice& l, const Int& gcd_class) {
  Json payload;
  payload["q"] = l.q;
  payload["gcd_class"] = gcd_class.str();
  payload["flat_count"] = l.flats.size();
  Json flats = Json::array();
  for (const Flat& f : l.flats) {
    Json one;
    one["closure"] = index_array_1based(f.closure);
    one["cardinality"] = f.cardinality.str();
    one["generator"] = index_array_1based(f.generator);
    flats.push_back(std::move(one));
  }
  payload["flats"] = std::move(flats);
  Json covers = Json::array();
  for (const auto& [lo, hi] : l.covers) covers.push_back(Json::array({lo, hi}));
  payload["covers"] = std::move(covers);
  return payload;
}

IntersectionLattice lattice_from_payload(const Json& payload) {
  IntersectionLattice l;
  l.q = payload.at("q").get<std::int64_t>();
  for (const auto& one : payload.at("flats")) {
    Flat f;
    f.closure = index_array_0based(one.at("closure"));
    f.cardinality = Int(one.at("cardinality").get<std::string>());
    f.generator = index_array_0based(one.at("generator"));
    l.flats.push_back(std::move(f));
  }
  for (const auto& pair : payload.at("covers"))
    l.covers.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
  return l;
}

Json verify_payload(const VerifyReport& report, std::int64_t q_max) {
  Json payload;
  payload["q_max"] = q_max;
  payload["q0_bound"] = report.q0.str();
  payload["rho0"] = report.rho0.str();
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json one;
    one["name"] = c.name;
    one["status"] = c.skipped ? "skip" : (c.passed ? "pass" : "fail");
    one["detail"] = c.detail;
    checks.push_back(std::move(one));
  }
  payload["checks"] = std::move(checks);
  payload["all_passed"] = report.all_passed();
  return payload;
}

Json result_document(const std::string& command, const std::string& input_path,
                     const IntMatrix& matrix, Json payload, int exit_status) {
  Json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  Json input;
  input["path"] = input_path;
  input["rows"] = matrix.rows();
  input["cols"] = matrix.cols();
  input["digest"] = matrix_digest(matrix);
  doc["input"] = std::move(input);
  doc["payload"] = std::move(payload);
  doc["exit_status"] = exit_status;
  return doc;
}

}  // namespace charq
