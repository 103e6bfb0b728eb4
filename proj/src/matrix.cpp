#include "charq/matrix.hpp"

#include "charq/errors.hpp"

#include <fstream>
#include <sstream>

namespace charq {

IntMatrix make_matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const Index m = static_cast<Index>(rows.size());
  const Index n = m > 0 ? static_cast<Index>(rows.begin()->size()) : 0;
  IntMatrix out(m, n);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n)
      throw InputError("make_matrix: ragged rows");
    Index j = 0;
    for (const auto x : row) out(i, j++) = Int(x);
    ++i;
  }
  return out;
}

IntMatrix select_columns(const IntMatrix& m, const std::vector<int>& cols) {
  IntMatrix out(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] < 0 || cols[j] >= m.cols())
      throw InputError("select_columns: column index out of range");
    out.col(static_cast<Index>(j)) = m.col(cols[j]);
  }
  return out;
}

Int max_abs_entry(const IntMatrix& m) {
  Int best = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      Int a = abs(m(i, j));
      if (a > best) best = std::move(a);
    }
  return best;
}

bool is_zero_matrix(const IntMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

namespace {

bool is_integer_token(const std::string& tok) {
  std::size_t k = 0;
  if (tok.size() > 0 && (tok[0] == '+' || tok[0] == '-')) k = 1;
  if (k == tok.size()) return false;
  for (; k < tok.size(); ++k)
    if (tok[k] < '0' || tok[k] > '9') return false;
  return true;
}

}  // namespace

IntMatrix parse_matrix(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok[0] == '#') continue; // comment line
    do {
      if (!is_integer_token(tok))
        throw ParseError("matrix: line " + std::to_string(lineno) + ": token '" + tok +
                         "' is not an integer");
      tokens.push_back(tok);
    } while (ls >> tok);
  }
  if (tokens.size() < 2) throw ParseError("matrix: missing 'm n' header");

  long m = 0, n = 0;
  try {
    m = std::stol(tokens[0]);
    n = std::stol(tokens[1]);
  } catch (const std::exception&) {
    throw ParseError("matrix: header dimensions out of range");
  }
  if (m < 1 || n < 1) throw ParseError("matrix: header dimensions must be positive");
  if (static_cast<long>(tokens.size()) != 2 + m * n)
    throw ParseError("matrix: expected " + std::to_string(m * n) + " entries for a " +
                     std::to_string(m) + " x " + std::to_string(n) + " matrix, found " +
                     std::to_string(tokens.size() - 2));

  IntMatrix out(m, n);
  std::size_t k = 2;
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < n; ++j) out(i, j) = Int(tokens[k++]);
  return out;
}

IntMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  return parse_matrix(in);
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace charq
