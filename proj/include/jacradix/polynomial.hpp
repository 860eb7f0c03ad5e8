#ifndef JACRADIX_POLYNOMIAL_HPP
#define JACRADIX_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jacradix/monomial.hpp"
#include "jacradix/numeric.hpp"

namespace jacradix {

template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Int> {
  static constexpr bool is_field = false;
  static Int zero() { return Int(0); }
  static Int one() { return Int(1); }
  static bool is_unit(const Int& c) { return c == 1 || c == -1; }
  static Int inverse(const Int& c) {
    if (!is_unit(c)) throw std::domain_error("not a unit in Z");
    return c;
  }
};

template <>
struct coeff_traits<Rat> {
  static constexpr bool is_field = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool is_unit(const Rat& c) { return c != 0; }
  static Rat inverse(const Rat& c) {
    if (c == 0) throw std::domain_error("division by zero");
    return Rat(1) / c;
  }
};

template <class C>
C coeff_pow(const C& c, unsigned long n) {
  if constexpr (coeff_traits<C>::is_field) {
    return pow_rat(c, n);
  } else {
    return pow_int(c, n);
  }
}

// Sparse polynomial in a fixed number of variables. Terms are kept sorted
// descending under a fixed storage order (plain lex), with no zero
// coefficients, so equal polynomials have identical representations. Leading
// terms under a ring's monomial order are computed on demand.
template <class C>
class Polynomial {
 public:
  struct Term {
    Monomial m;
    C c;
  };

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, C c) {
    Polynomial p(nvars);
    if (c != coeff_traits<C>::zero()) p.terms_.push_back({Monomial(nvars), std::move(c)});
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t i,
                             unsigned exponent = 1) {
    Polynomial p(nvars);
    Monomial m(nvars);
    m.e[i] = exponent;
    if (exponent == 0) return constant(nvars, coeff_traits<C>::one());
    p.terms_.push_back({std::move(m), coeff_traits<C>::one()});
    return p;
  }

  static Polynomial term(Monomial m, C c) {
    Polynomial p(m.nvars());
    if (c != coeff_traits<C>::zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }
  // constant term (coefficient of the unit monomial)
  C constant_value() const {
    for (const Term& t : terms_)
      if (t.m.is_one()) return t.c;
    return coeff_traits<C>::zero();
  }

  long degree_in(std::size_t var) const {
    long d = -1;
    for (const Term& t : terms_) d = std::max(d, static_cast<long>(t.m.e[var]));
    return d;
  }

  unsigned long total_degree() const {
    unsigned long d = 0;
    for (const Term& t : terms_) d = std::max(d, t.m.total_degree());
    return d;
  }

  // index of the leading term under ord, or npos if zero
  std::size_t leading_index(const MonomialOrder& ord) const {
    if (terms_.empty()) return static_cast<std::size_t>(-1);
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (ord.less(terms_[best].m, terms_[i].m)) best = i;
    return best;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c)
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_compat(a, b);
    Polynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && storage_greater(a.terms_[i].m, b.terms_[j].m))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() ||
                 storage_greater(b.terms_[j].m, a.terms_[i].m)) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        C c = a.terms_[i].c + b.terms_[j].c;
        if (c != coeff_traits<C>::zero())
          r.terms_.push_back({a.terms_[i].m, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + b.negated();
  }

  Polynomial negated() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
  }

  Polynomial scaled(const C& c) const {
    Polynomial r(nvars_);
    if (c == coeff_traits<C>::zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m, t.c * c});
    return r;
  }

  // this * (c * X^m)
  Polynomial times_term(const Monomial& m, const C& c) const {
    Polynomial r(nvars_);
    if (c == coeff_traits<C>::zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    // storage order is preserved by multiplying with a fixed monomial
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compat(a, b);
    Polynomial r(a.nvars_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    // accumulate via repeated merge; fine at the sizes this library sees
    for (const Term& t : a.terms_) r = r + b.times_term(t.m, t.c);
    return r;
  }

  Polynomial pow(unsigned long n) const {
    Polynomial r = constant(nvars_, coeff_traits<C>::one());
    Polynomial base = *this;
    while (n > 0) {
      if (n & 1ul) r = r * base;
      base = (n >>= 1) ? base * base : base;
    }
    return r;
  }

  // Raw term insertion used by builders; sorts and combines at the end.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
      return storage_greater(x.m, y.m);
    });
    Polynomial r(nvars);
    for (Term& t : terms) {
      if (!r.terms_.empty() && r.terms_.back().m == t.m) {
        r.terms_.back().c += t.c;
        if (r.terms_.back().c == coeff_traits<C>::zero()) r.terms_.pop_back();
      } else if (t.c != coeff_traits<C>::zero()) {
        r.terms_.push_back(std::move(t));
      }
    }
    return r;
  }

 private:
  static void check_compat(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_)
      throw std::invalid_argument("polynomial arity mismatch");
  }
  // fixed storage order: lex, first variable most significant
  static bool storage_greater(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

// Coefficients of p with respect to var: returns a_0..a_d as polynomials with
// the same arity but degree 0 in var, satisfying p == sum a_i * var^i.
template <class C>
std::vector<Polynomial<C>> coefficients_in(const Polynomial<C>& p,
                                           std::size_t var) {
  long d = p.degree_in(var);
  if (d < 0) return {Polynomial<C>(p.nvars())};
  std::vector<std::vector<typename Polynomial<C>::Term>> buckets(
      static_cast<std::size_t>(d) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.m;
    unsigned k = m.e[var];
    m.e[var] = 0;
    buckets[k].push_back({std::move(m), t.c});
  }
  std::vector<Polynomial<C>> out;
  out.reserve(buckets.size());
  for (auto& b : buckets)
    out.push_back(Polynomial<C>::from_terms(p.nvars(), std::move(b)));
  return out;
}

// Substitute value for var, exactly.
template <class C>
Polynomial<C> substitute(const Polynomial<C>& p, std::size_t var,
                         const Polynomial<C>& value) {
  auto coeffs = coefficients_in(p, var);
  // Horner
  Polynomial<C> r(p.nvars());
  for (std::size_t i = coeffs.size(); i-- > 0;) r = r * value + coeffs[i];
  return r;
}

// p with every variable index shifted into a wider ring of new_nvars.
template <class C>
Polynomial<C> widen(const Polynomial<C>& p, std::size_t new_nvars) {
  std::vector<typename Polynomial<C>::Term> ts;
  ts.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Monomial m(new_nvars);
    std::copy(t.m.e.begin(), t.m.e.end(), m.e.begin());
    ts.push_back({std::move(m), t.c});
  }
  return Polynomial<C>::from_terms(new_nvars, std::move(ts));
}

// Restriction to the first keep variables; requires p to involve only those.
template <class C>
Polynomial<C> narrow(const Polynomial<C>& p, std::size_t keep) {
  std::vector<typename Polynomial<C>::Term> ts;
  for (const auto& t : p.terms()) {
    Monomial m(keep);
    for (std::size_t i = keep; i < t.m.e.size(); ++i)
      if (t.m.e[i] != 0)
        throw std::invalid_argument("narrow: polynomial leaves the subring");
    std::copy(t.m.e.begin(), t.m.e.begin() + static_cast<long>(keep),
              m.e.begin());
    ts.push_back({std::move(m), t.c});
  }
  return Polynomial<C>::from_terms(keep, std::move(ts));
}

template <class C>
bool involves_only_prefix(const Polynomial<C>& p, std::size_t keep) {
  for (const auto& t : p.terms())
    for (std::size_t i = keep; i < t.m.e.size(); ++i)
      if (t.m.e[i] != 0) return false;
  return true;
}

}  // namespace jacradix

#endif  // JACRADIX_POLYNOMIAL_HPP
