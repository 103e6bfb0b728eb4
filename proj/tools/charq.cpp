// charq: characteristic quasi-polynomials, periods, characteristic
// polynomials, and mod-q intersection lattices of integral central
// arrangements, from a plain-text coefficient matrix.

#include "charq/arrangement.hpp"
#include "charq/errors.hpp"
#include "charq/lattice.hpp"
#include "charq/matrix.hpp"
#include "charq/modular.hpp"
#include "charq/oracle.hpp"
#include "charq/serialize.hpp"
#include "charq/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

struct CommonOpts {
  bool json = false;
  unsigned threads = 1;
  std::uint64_t max_subsets = charq::kDefaultMaxSubsets;
};

std::string closure_label(const std::vector<int>& closure) {
  if (closure.empty()) return "V";
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < closure.size(); ++i) {
    if (i > 0) os << ',';
    os << closure[i] + 1;
  }
  os << '}';
  return os.str();
}

void print_document(const std::string& command, const std::string& path,
                    const charq::IntMatrix& c, charq::Json payload, int status) {
  std::cout << charq::result_document(command, path, c, std::move(payload), status).dump(2)
            << '\n';
}

void print_input_line(const charq::IntMatrix& c) {
  std::cout << "input: " << c.rows() << " x " << c.cols() << " matrix ("
            << charq::matrix_digest(c) << ")\n";
}

int cmd_quasipoly(const std::string& path, const CommonOpts& opts) {
  const charq::IntMatrix c = charq::parse_matrix_file(path);
  const charq::Arrangement a(c, opts.max_subsets);
  const charq::CharQuasiPolynomial p = charq::char_quasi_poly(a, opts.threads);
  const charq::Int rho_e = charq::period_rhoE(a);
  const charq::Int min_period = charq::minimum_period(p);

  if (opts.json) {
    print_document("quasipoly", path, c, charq::quasipoly_payload(p, rho_e, min_period),
                   kExitOk);
    return kExitOk;
  }
  print_input_line(c);
  std::cout << "rho_0 = " << p.period << '\n';
  std::cout << "rho_E = " << rho_e << '\n';
  std::cout << "minimum period = " << min_period << '\n';
  std::cout << "constituents by gcd{rho_0, q}:\n";
  for (const auto& [d, alpha] : p.constituents) {
    std::vector<charq::Int> full = alpha;
    full.push_back(charq::Int(1));
    std::cout << "  gcd " << d << ": " << charq::polynomial_text(full, 'q') << '\n';
  }
  return kExitOk;
}

int cmd_chi(const std::string& path, const CommonOpts& opts) {
  const charq::IntMatrix c = charq::parse_matrix_file(path);
  const charq::Arrangement a(c, opts.max_subsets);
  const charq::CharQuasiPolynomial p = charq::char_quasi_poly(a, opts.threads);

  std::vector<charq::Int> chi = p.constituents.at(charq::Int(1));
  chi.push_back(charq::Int(1));

  std::vector<std::int64_t> points;
  for (std::int64_t q = 1; static_cast<charq::Index>(points.size()) < a.dimension() + 1; ++q)
    if (charq::gcd(p.period, charq::Int(q)) == charq::Int(1)) points.push_back(q);
  const std::vector<charq::Int> interp =
      charq::interpolate_chi(a, points, charq::kDefaultBudget, opts.threads);
  const bool agrees = interp == chi;

  const std::string text = charq::polynomial_text(chi, 't');
  const std::string factored = charq::factored_text(chi, 't');
  const int status = agrees ? kExitOk : kExitVerificationFailed;

  if (opts.json) {
    charq::Json payload;
    charq::Json coeffs = charq::Json::array();
    for (const charq::Int& x : chi) coeffs.push_back(x.str());
    payload["coefficients"] = std::move(coeffs);
    payload["text"] = text;
    if (!factored.empty()) payload["factored"] = factored;
    charq::Json check;
    check["points"] = points;
    check["agrees"] = agrees;
    payload["cross_check"] = std::move(check);
    print_document("chi", path, c, std::move(payload), status);
    return status;
  }
  print_input_line(c);
  std::cout << "chi(t) = " << text << '\n';
  if (!factored.empty()) std::cout << "       = " << factored << '\n';
  std::cout << "cross-check: interpolation through q = {";
  for (std::size_t i = 0; i < points.size(); ++i) std::cout << (i ? ", " : "") << points[i];
  std::cout << "} " << (agrees ? "agrees" : "DISAGREES") << '\n';
  return status;
}

int cmd_count(const std::string& path, std::int64_t q, bool oracle, const CommonOpts& opts) {
  const charq::IntMatrix c = charq::parse_matrix_file(path);
  const charq::Arrangement a(c, opts.max_subsets);
  const charq::CharQuasiPolynomial p = charq::char_quasi_poly(a, opts.threads);
  const charq::Int formula = charq::evaluate(p, q);
  const charq::Int cls = charq::gcd(p.period, charq::Int(q));

  bool agree = true;
  charq::Int brute;
  if (oracle) {
    brute = charq::Int(charq::count_complement(c, q, charq::kDefaultBudget, opts.threads));
    agree = brute == formula;
  }
  const int status = agree ? kExitOk : kExitVerificationFailed;

  if (opts.json) {
    charq::Json payload;
    payload["q"] = q;
    payload["gcd_class"] = cls.str();
    payload["count"] = formula.str();
    if (oracle) {
      payload["oracle_count"] = brute.str();
      payload["agree"] = agree;
    }
    print_document("count", path, c, std::move(payload), status);
    return status;
  }
  print_input_line(c);
  std::cout << "q = " << q << " (gcd{rho_0, q} = " << cls << ")\n";
  std::cout << "count = " << formula << '\n';
  if (oracle) {
    std::cout << "oracle = " << brute << '\n';
    std::cout << "agree: " << (agree ? "yes" : "NO") << '\n';
  }
  return status;
}

int cmd_lattice(const std::string& path, std::int64_t q, const std::string& dot_path,
                const CommonOpts& opts) {
  const charq::IntMatrix c = charq::parse_matrix_file(path);
  const charq::Arrangement a(c, opts.max_subsets);
  const charq::IntersectionLattice lat = charq::build_lattice(a, q);
  const charq::Int cls = charq::gcd(charq::period_rho0(a), charq::Int(q));

  if (!dot_path.empty()) {
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) throw charq::InputError("cannot write DOT file: " + dot_path);
    out << charq::hasse_dot(lat);
  }

  if (opts.json) {
    charq::Json payload = charq::lattice_payload(lat, cls);
    if (!dot_path.empty()) payload["dot_path"] = dot_path;
    print_document("lattice", path, c, std::move(payload), kExitOk);
    return kExitOk;
  }
  print_input_line(c);
  std::cout << "q = " << q << " (gcd{rho_0, q} = " << cls << ")\n";
  std::cout << "flats: " << lat.flats.size() << '\n';
  for (std::size_t i = 0; i < lat.flats.size(); ++i) {
    const charq::Flat& f = lat.flats[i];
    std::cout << "  [" << i << "] " << closure_label(f.closure) << "  points = " << f.cardinality
              << "  generator " << (f.generator.empty() ? "{}" : closure_label(f.generator))
              << '\n';
  }
  std::cout << "covers (lower -> upper):\n";
  for (const auto& [lo, hi] : lat.covers)
    std::cout << "  " << closure_label(lat.flats[lo].closure) << " -> "
              << closure_label(lat.flats[hi].closure) << '\n';
  if (!dot_path.empty()) std::cout << "dot written to " << dot_path << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& path, std::int64_t q_max, bool q_max_given,
               const CommonOpts& opts) {
  const charq::IntMatrix c = charq::parse_matrix_file(path);
  const charq::Arrangement a(c, opts.max_subsets);

  if (!q_max_given) {
    const charq::Int suggested = charq::q0_bound(a) + charq::Int(2) * charq::period_rho0(a);
    if (!suggested.fits_int64())
      throw charq::InputError("default q_max = q0_bound + 2 * rho_0 = " + suggested.str() +
                              " is too large; pass --qmax explicitly");
    q_max = suggested.to_int64();
  }

  charq::VerifyOptions vopts;
  vopts.threads = opts.threads;
  const charq::VerifyReport report = charq::run_verification(a, q_max, vopts);
  const int status = report.all_passed() ? kExitOk : kExitVerificationFailed;

  if (opts.json) {
    print_document("verify", path, c, charq::verify_payload(report, q_max), status);
    return status;
  }
  print_input_line(c);
  std::cout << "q_max = " << q_max << '\n';
  std::cout << "q0 bound = " << report.q0 << '\n';
  std::cout << "rho_0 = " << report.rho0 << '\n';
  for (const charq::CheckResult& check : report.checks) {
    const char* tag = check.skipped ? "skip" : (check.passed ? "pass" : "FAIL");
    std::cout << "[" << tag << "] " << check.name << ": " << check.detail << '\n';
  }
  std::cout << (report.all_passed() ? "all checks passed" : "verification FAILED") << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"characteristic quasi-polynomials and mod-q intersection lattices of integral "
               "central hyperplane arrangements"};
  app.require_subcommand(1);

  CommonOpts opts;
  opts.threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_flag("--json", opts.json, "emit a JSON result document instead of text");
  app.add_option("--threads", opts.threads, "worker threads (never affects output bytes)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-subsets", opts.max_subsets,
                 "cap on enumerated column subsets (default 2^22)");

  std::string path;
  std::int64_t q = 1;
  std::int64_t q_max = 0;
  bool oracle = false;
  std::string dot_path;

  auto* quasipoly = app.add_subcommand(
      "quasipoly", "periods and one constituent polynomial per divisor of rho_0");
  quasipoly->add_option("matrix", path, "matrix file")->required();

  auto* chi = app.add_subcommand(
      "chi", "characteristic polynomial of the real arrangement, with oracle cross-check");
  chi->add_option("matrix", path, "matrix file")->required();

  auto* count = app.add_subcommand("count", "number of points avoiding every hyperplane mod q");
  count->add_option("matrix", path, "matrix file")->required();
  count->add_option("--q", q, "modulus")->required()->check(CLI::PositiveNumber);
  count->add_flag("--oracle", oracle, "also count by brute force and compare");

  auto* lattice = app.add_subcommand("lattice", "intersection lattice of the mod-q arrangement");
  lattice->add_option("matrix", path, "matrix file")->required();
  lattice->add_option("--q", q, "modulus")->required()->check(CLI::PositiveNumber);
  lattice->add_option("--dot", dot_path, "write the Hasse diagram in DOT format to this file");

  auto* verify = app.add_subcommand("verify", "run the full consistency harness");
  verify->add_option("matrix", path, "matrix file")->required();
  auto* qmax_opt =
      verify->add_option("--qmax", q_max, "largest modulus to check (default q0 + 2 rho_0)")
          ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (quasipoly->parsed()) return cmd_quasipoly(path, opts);
    if (chi->parsed()) return cmd_chi(path, opts);
    if (count->parsed()) return cmd_count(path, q, oracle, opts);
    if (lattice->parsed()) return cmd_lattice(path, q, dot_path, opts);
    if (verify->parsed()) return cmd_verify(path, q_max, qmax_opt->count() > 0, opts);
  } catch (const charq::CapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const charq::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const charq::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const charq::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitInputError;
}
