#ifndef JACRADIX_NUMERIC_HPP
#define JACRADIX_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace jacradix {

using Int = mpz_class;
using Rat = mpq_class;

struct GcdExt {
  Int g;  // nonnegative
  Int s;
  Int t;  // g == s*x + t*y
};

// Extended Euclid with the gcd normalized nonnegative. gcd_ext(0,0) is (0,0,0).
inline GcdExt gcd_ext(const Int& x, const Int& y) {
  GcdExt r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), x.get_mpz_t(),
             y.get_mpz_t());
  return r;
}

inline Int gcd(const Int& x, const Int& y) {
  Int g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

inline Int lcm(const Int& x, const Int& y) {
  Int l;
  mpz_lcm(l.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return l;
}

// Exact quotient, or nothing. 0 divides only 0.
inline std::optional<Int> divide_exact(const Int& d, const Int& x) {
  if (d == 0) {
    if (x == 0) return Int(0);
    return std::nullopt;
  }
  if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
  Int q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

// Floor division: x = q*d + r with 0 <= r < |d|. Requires d != 0.
inline void fdiv_qr(Int& q, Int& r, const Int& x, const Int& d) {
  if (d > 0) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  } else {
    mpz_cdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
}

inline Int pow_int(const Int& a, unsigned long n) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), n);
  return r;
}

inline Rat pow_rat(const Rat& a, unsigned long n) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), a.get_num().get_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), a.get_den().get_mpz_t(), n);
  return r;  // already canonical: powers of a canonical fraction
}

// Value in Z/n with 0 <= value < modulus, modulus > 1.
struct ModularInt {
  Int value;
  Int modulus;

  ModularInt(Int v, Int n) : modulus(std::move(n)) {
    if (modulus <= 1) throw std::invalid_argument("ModularInt: modulus <= 1");
    Int q;
    fdiv_qr(q, value, v, modulus);
  }

  friend ModularInt operator*(const ModularInt& a, const ModularInt& b) {
    return ModularInt(a.value * b.value, a.modulus);
  }
  friend ModularInt operator+(const ModularInt& a, const ModularInt& b) {
    return ModularInt(a.value + b.value, a.modulus);
  }
  friend bool operator==(const ModularInt& a, const ModularInt& b) {
    return a.value == b.value && a.modulus == b.modulus;
  }
};

// Witness of non-invertibility: the nontrivial common divisor.
struct NotInvertible {
  Int g;  // g | a, g | modulus, g > 1
};

inline std::variant<ModularInt, NotInvertible> mod_inverse(const ModularInt& a) {
  GcdExt e = gcd_ext(a.value, a.modulus);
  if (e.g != 1) return NotInvertible{e.g};
  return ModularInt(e.s, a.modulus);
}

inline ModularInt pow_mod(const ModularInt& a, unsigned long n) {
  Int r;
  Int e(static_cast<unsigned long>(n));
  mpz_powm(r.get_mpz_t(), a.value.get_mpz_t(), e.get_mpz_t(),
           a.modulus.get_mpz_t());
  return ModularInt(r, a.modulus);
}

}  // namespace jacradix

#endif  // JACRADIX_NUMERIC_HPP
