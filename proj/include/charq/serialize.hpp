#pragma once

// Machine-readable result documents (JSON, schema_version 1), the input
// digest, and polynomial pretty-printing shared by the CLI and tests.

#include "charq/arrangement.hpp"
#include "charq/lattice.hpp"
#include "charq/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace charq {

using Json = nlohmann::ordered_json;

/// FNV-1a 64 digest of the canonical matrix text, "fnv1a64:<16 hex>".
std::string matrix_digest(const IntMatrix& m);

/// "q^2 - 3q + 2" from ascending coefficients (constant first).
std::string polynomial_text(const std::vector<Int>& ascending, char var);

// Product of the integer-root factors, e.g. "t(t - 1)(t - 2)"; empty when
// no integer root exists. A residual factor without integer roots is
// printed as a parenthesized polynomial.
std::string factored_text(const std::vector<Int>& ascending, char var);

Json quasipoly_payload(const CharQuasiPolynomial& p, const Int& rho_e, const Int& min_period);
CharQuasiPolynomial quasipoly_from_payload(const Json& payload);

Json lattice_payload(const IntersectionLattice& l, const Int& gcd_class);
IntersectionLattice lattice_from_payload(const Json& payload);

Json verify_payload(const VerifyReport& report, std::int64_t q_max);

Json result_document(const std::string& command, const std::string& input_path,
                     const IntMatrix& matrix, Json payload, int exit_status);

}  // namespace charq
