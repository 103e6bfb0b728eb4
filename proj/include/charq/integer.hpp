#pragma once

// Exact arbitrary-precision integers and rationals on top of GMP, with the
// small amount of glue Eigen needs to use them as a matrix scalar.

#include <gmp.h>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace charq {

class Int {
 public:
  Int() { mpz_init(v_); }
  Int(int x) { mpz_init_set_si(v_, x); }
  Int(long x) { mpz_init_set_si(v_, x); }
  Int(long long x) { mpz_init_set_si(v_, static_cast<long>(x)); }
  Int(unsigned x) { mpz_init_set_ui(v_, x); }
  Int(unsigned long x) { mpz_init_set_ui(v_, x); }
  Int(unsigned long long x) { mpz_init_set_ui(v_, static_cast<unsigned long>(x)); }
  explicit Int(std::string_view s) {
    mpz_init(v_);
    if (mpz_set_str(v_, std::string(s).c_str(), 10) != 0) {
      mpz_clear(v_);
      throw std::invalid_argument("Int: not a decimal integer: '" + std::string(s) + "'");
    }
  }

  Int(const Int& o) { mpz_init_set(v_, o.v_); }
  Int(Int&& o) noexcept {
    mpz_init(v_);
    mpz_swap(v_, o.v_);
  }
  Int& operator=(const Int& o) {
    if (this != &o) mpz_set(v_, o.v_);
    return *this;
  }
  Int& operator=(Int&& o) noexcept {
    mpz_swap(v_, o.v_);
    return *this;
  }
  ~Int() { mpz_clear(v_); }

  void swap(Int& o) noexcept { mpz_swap(v_, o.v_); }

  mpz_srcptr raw() const { return v_; }
  mpz_ptr raw() { return v_; }

  int sign() const { return mpz_sgn(v_); }
  bool is_zero() const { return mpz_sgn(v_) == 0; }
  bool is_one() const { return mpz_cmp_si(v_, 1) == 0; }
  bool odd() const { return mpz_odd_p(v_) != 0; }

  bool fits_int64() const { return mpz_fits_slong_p(v_) != 0; }
  std::int64_t to_int64() const {
    if (!fits_int64()) throw std::overflow_error("Int: value does not fit in 64 bits");
    return mpz_get_si(v_);
  }

  std::string str() const {
    char* s = mpz_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*free_fn)(void*, std::size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(s, out.size() + 1);
    return out;
  }

  Int& operator+=(const Int& o) {
    mpz_add(v_, v_, o.v_);
    return *this;
  }
  Int& operator-=(const Int& o) {
    mpz_sub(v_, v_, o.v_);
    return *this;
  }
  Int& operator*=(const Int& o) {
    mpz_mul(v_, v_, o.v_);
    return *this;
  }
  // Truncated (C-style) division.
  Int& operator/=(const Int& o) {
    mpz_tdiv_q(v_, v_, o.v_);
    return *this;
  }
  Int& operator%=(const Int& o) {
    mpz_tdiv_r(v_, v_, o.v_);
    return *this;
  }

  friend Int operator+(const Int& a, const Int& b) {
    Int r;
    mpz_add(r.v_, a.v_, b.v_);
    return r;
  }
  friend Int operator-(const Int& a, const Int& b) {
    Int r;
    mpz_sub(r.v_, a.v_, b.v_);
    return r;
  }
  friend Int operator*(const Int& a, const Int& b) {
    Int r;
    mpz_mul(r.v_, a.v_, b.v_);
    return r;
  }
  friend Int operator/(const Int& a, const Int& b) {
    Int r;
    mpz_tdiv_q(r.v_, a.v_, b.v_);
    return r;
  }
  friend Int operator%(const Int& a, const Int& b) {
    Int r;
    mpz_tdiv_r(r.v_, a.v_, b.v_);
    return r;
  }
  Int operator-() const {
    Int r;
    mpz_neg(r.v_, v_);
    return r;
  }

  friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    const int c = mpz_cmp(a.v_, b.v_);
    return c <=> 0;
  }
  friend bool operator==(const Int& a, long b) { return mpz_cmp_si(a.v_, b) == 0; }
  friend std::strong_ordering operator<=>(const Int& a, long b) {
    const int c = mpz_cmp_si(a.v_, b);
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.str(); }
  friend std::istream& operator>>(std::istream& is, Int& x) {
    std::string tok;
    is >> tok;
    if (is) x = Int(tok);
    return is;
  }

 private:
  mpz_t v_;
};

inline void swap(Int& a, Int& b) noexcept { a.swap(b); }

inline Int abs(const Int& x) {
  Int r;
  mpz_abs(r.raw(), x.raw());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.raw(), a.raw(), b.raw());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.raw(), a.raw(), b.raw());
  return r;
}

inline Int pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.raw(), base.raw(), exp);
  return r;
}

// True iff d | x (every d divides 0; only 0 divides 0 when d == 0).
inline bool divides(const Int& d, const Int& x) { return mpz_divisible_p(x.raw(), d.raw()) != 0; }

// Exact division; quotient is only defined when divides(b, a).
inline Int divexact(const Int& a, const Int& b) {
  Int r;
  mpz_divexact(r.raw(), a.raw(), b.raw());
  return r;
}

inline bool probably_prime(const Int& x) { return mpz_probab_prime_p(x.raw(), 30) > 0; }

// Exact rationals; used only where interpolation demands division.
class Rat {
 public:
  Rat() { mpq_init(v_); }
  Rat(const Int& x) {
    mpq_init(v_);
    mpq_set_z(v_, x.raw());
  }
  Rat(long x) {
    mpq_init(v_);
    mpq_set_si(v_, x, 1);
  }
  Rat(const Int& num, const Int& den) {
    if (den.is_zero()) throw std::invalid_argument("Rat: zero denominator");
    mpq_init(v_);
    mpq_set_num(v_, num.raw());
    mpq_set_den(v_, den.raw());
    mpq_canonicalize(v_);
  }
  Rat(const Rat& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rat(Rat&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rat& operator=(const Rat& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rat& operator=(Rat&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rat() { mpq_clear(v_); }

  Int num() const {
    Int r;
    mpz_set(r.raw(), mpq_numref(v_));
    return r;
  }
  Int den() const {
    Int r;
    mpz_set(r.raw(), mpq_denref(v_));
    return r;
  }
  bool is_integer() const { return mpz_cmp_si(mpq_denref(v_), 1) == 0; }
  bool is_zero() const { return mpq_sgn(v_) == 0; }

  Rat& operator+=(const Rat& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    mpq_div(v_, v_, o.v_);
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const {
    Rat r;
    mpq_neg(r.v_, v_);
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_, b.v_) != 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = mpq_cmp(a.v_, b.v_);
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& x) {
    os << x.num();
    if (!x.is_integer()) os << '/' << x.den();
    return os;
  }

 private:
  mpq_t v_;
};

}  // namespace charq

namespace Eigen {

template <>
struct NumTraits<charq::Int> : GenericNumTraits<charq::Int> {
  using Real = charq::Int;
  using NonInteger = charq::Int;
  using Nested = charq::Int;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 80,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
