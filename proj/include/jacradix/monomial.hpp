#ifndef JACRADIX_MONOMIAL_HPP
#define JACRADIX_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace jacradix {

// Exponent vector over a fixed ordered variable list.
struct Monomial {
  std::vector<unsigned> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0u) {}

  std::size_t nvars() const { return e.size(); }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
  }
  unsigned long total_degree() const {
    return std::accumulate(e.begin(), e.end(), 0ul);
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e == b.e;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  // m / *this, assuming divisibility
  Monomial quotient_of(const Monomial& m) const {
    Monomial r(nvars());
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = m.e[i] - e[i];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.e.size(); ++i)
      r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
};

// Monomial orders. BlockElim(k) eliminates the variable suffix starting at
// index k: it compares single-variable exponents from the last variable down
// to index k, then falls back to degrevlex on the prefix. BlockElim(0) is the
// full elimination order used by the extraction pipeline, where prefix
// contraction must be available at every cut point.
struct MonomialOrder {
  enum Kind { Degrevlex, Lex, BlockElim } kind = Degrevlex;
  std::size_t block_start = 0;  // BlockElim only

  static MonomialOrder degrevlex() { return {Degrevlex, 0}; }
  static MonomialOrder lex() { return {Lex, 0}; }
  static MonomialOrder block_elim(std::size_t k) { return {BlockElim, k}; }

  // strict a < b
  bool less(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Lex: {
        for (std::size_t i = 0; i < a.e.size(); ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        }
        return false;
      }
      case BlockElim: {
        for (std::size_t i = a.e.size(); i-- > block_start;) {
          if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        }
        return degrevlex_less(a, b, block_start);
      }
      case Degrevlex:
      default:
        return degrevlex_less(a, b, a.e.size());
    }
  }

  bool equal(const Monomial& a, const Monomial& b) const { return a == b; }

 private:
  // degrevlex on variables [0, n)
  static bool degrevlex_less(const Monomial& a, const Monomial& b,
                             std::size_t n) {
    unsigned long da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da < db;
    for (std::size_t i = n; i-- > 0;) {
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
  }
};

}  // namespace jacradix

#endif  // JACRADIX_MONOMIAL_HPP
