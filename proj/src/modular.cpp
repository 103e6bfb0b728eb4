#include "charq/modular.hpp"

#include "charq/errors.hpp"

namespace charq {

Int kernel_cardinality(const SmithData& snf, Index rows, std::int64_t q) {
  if (q < 1) throw InputError("kernel_cardinality: q must be positive");
  const Int qi(q);
  Int count = pow(qi, static_cast<unsigned long>(rows - snf.rank));
  for (const Int& e : snf.divisors) count *= gcd(e, qi);
  return count;
}

Int kernel_cardinality(const IntMatrix& g, std::int64_t q) {
  return kernel_cardinality(smith_normal_form(g), g.rows(), q);
}

bool in_column_space_mod_q(const SmithData& snf, const IntVector& b, std::int64_t q) {
  if (q < 1) throw InputError("in_column_space_mod_q: q must be positive");
  if (snf.left.cols() != b.size())
    throw InputError("in_column_space_mod_q: vector length does not match matrix rows");
  const Int qi(q);
  const IntVector y = snf.left * b;
  for (Index i = 0; i < y.size(); ++i) {
    const Int modulus = i < snf.rank ? gcd(snf.divisors[i], qi) : qi;
    if (!divides(modulus, y(i))) return false;
  }
  return true;
}

bool in_column_space_mod_q(const IntMatrix& a, const IntVector& b, std::int64_t q) {
  if (a.rows() != b.size())
    throw InputError("in_column_space_mod_q: vector length does not match matrix rows");
  return in_column_space_mod_q(smith_normal_form(a), b, q);
}

}  // namespace charq
