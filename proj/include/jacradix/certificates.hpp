#ifndef JACRADIX_CERTIFICATES_HPP
#define JACRADIX_CERTIFICATES_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "jacradix/polynomial.hpp"

namespace jacradix {

// All certificates are stated in the free polynomial ring: a membership
// relative to an ideal of a quotient ring carries the quotient's relation
// polynomials in its own generator list (the tail, past n_primary).
// Verification is therefore always a literal arithmetic replay.
template <class C>
struct MembershipCert {
  Polynomial<C> target;
  std::vector<Polynomial<C>> generators;
  std::vector<Polynomial<C>> cofactors;
  std::size_t n_primary = 0;  // generators[0..n_primary) form the ideal proper
};

template <class C>
struct NilpotencyCert {
  Polynomial<C> element;
  unsigned long exponent = 0;
  MembershipCert<C> body;  // target == element^exponent
};

template <class C>
struct UnitCert {
  Polynomial<C> element;
  Polynomial<C> inverse;
  // 1 == inverse*element + combination of relation generators
  MembershipCert<C> body;
};

// a^l * f^n + c_{n-1} f^{n-1} + ... + c_0 lies in the relation ideal
template <class C>
struct IntegralityCert {
  Polynomial<C> element;    // f
  Polynomial<C> localizer;  // a
  unsigned long l = 0;
  unsigned long n = 0;
  std::vector<Polynomial<C>> coeffs;  // c_0..c_{n-1}
  MembershipCert<C> body;
};

template <class C>
struct KdimCert {
  std::vector<Polynomial<C>> elements;   // x_0..x_n
  std::vector<unsigned long> exponents;  // e_0..e_n
  // x_0^{e_0}...x_n^{e_n} in the staircase ideal
  MembershipCert<C> body;
};

// Evidence that some concrete query 1 in <generators, 1-a*b> failed: the
// normal form of 1 is a nonzero irreducible remainder.
template <class C>
struct Refutation {
  Polynomial<C> element;  // the a whose Jac membership the query tested
  Polynomial<C> b;
  Polynomial<C> adjoined;  // 1 - a*b
  Polynomial<C> remainder;
  std::vector<Polynomial<C>> generators;
};

template <class C>
using OracleResult = std::variant<MembershipCert<C>, Refutation<C>>;

// Demand-driven capability for "a in Jac I": each query b yields a
// certificate of 1 in <I, 1-a*b>, or a refutation.
template <class C>
struct JacOracle {
  Polynomial<C> element;
  std::vector<Polynomial<C>> ideal_gens;
  std::function<OracleResult<C>(const Polynomial<C>&)> query;
};

struct VerifyMismatch {
  std::string what;
};

template <class C>
std::optional<VerifyMismatch> verify(const MembershipCert<C>& c) {
  if (c.generators.size() != c.cofactors.size())
    return VerifyMismatch{"cofactor/generator count mismatch"};
  Polynomial<C> acc(c.target.nvars());
  for (std::size_t i = 0; i < c.generators.size(); ++i)
    acc = acc + c.cofactors[i] * c.generators[i];
  if (!(acc - c.target).is_zero())
    return VerifyMismatch{"combination does not replay to target"};
  return std::nullopt;
}

template <class C>
std::optional<VerifyMismatch> verify(const NilpotencyCert<C>& c) {
  if (c.body.target != c.element.pow(c.exponent))
    return VerifyMismatch{"body target is not element^exponent"};
  return verify(c.body);
}

template <class C>
std::optional<VerifyMismatch> verify(const UnitCert<C>& c) {
  if (c.body.target != Polynomial<C>::constant(c.element.nvars(),
                                               coeff_traits<C>::one()))
    return VerifyMismatch{"unit body target is not 1"};
  if (c.body.generators.empty() || c.body.generators[0] != c.element ||
      c.body.cofactors[0] != c.inverse)
    return VerifyMismatch{"unit body does not carry u,v up front"};
  return verify(c.body);
}

template <class C>
std::optional<VerifyMismatch> verify(const IntegralityCert<C>& c) {
  if (c.n < 1) return VerifyMismatch{"integral dependence of degree 0"};
  if (c.coeffs.size() != c.n) return VerifyMismatch{"coefficient count"};
  Polynomial<C> dep =
      c.localizer.pow(c.l) * c.element.pow(c.n);
  for (std::size_t i = 0; i < c.n; ++i)
    dep = dep + c.coeffs[i] * c.element.pow(i);
  if (dep != c.body.target)
    return VerifyMismatch{"body target is not the stated dependence"};
  return verify(c.body);
}

template <class C>
std::optional<VerifyMismatch> verify(const KdimCert<C>& c) {
  if (c.elements.size() != c.exponents.size() || c.elements.empty())
    return VerifyMismatch{"element/exponent shape"};
  std::size_t nv = c.elements[0].nvars();
  Polynomial<C> target = Polynomial<C>::constant(nv, coeff_traits<C>::one());
  for (std::size_t i = 0; i < c.elements.size(); ++i)
    target = target * c.elements[i].pow(c.exponents[i]);
  if (target != c.body.target)
    return VerifyMismatch{"body target is not the staircase monomial"};
  // staircase generator list, in order
  Polynomial<C> prefix = Polynomial<C>::constant(nv, coeff_traits<C>::one());
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    Polynomial<C> expect = prefix * c.elements[i].pow(c.exponents[i] + 1);
    if (i >= c.body.n_primary || c.body.generators[i] != expect)
      return VerifyMismatch{"staircase generator list mismatch"};
    prefix = prefix * c.elements[i].pow(c.exponents[i]);
  }
  return verify(c.body);
}

namespace detail {
template <class C>
C binomial_coeff(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  if constexpr (coeff_traits<C>::is_field) {
    return Rat(b);
  } else {
    return b;
  }
}
}  // namespace detail

// Cut rule for nilpotency: from (x*y)^k in <U> and x^m in <U, y>, produce
// x^{(m+1)k} in <U>. The y generator must be the last entry of c2's list and
// c2's remaining generators must equal c1's list.
template <class C>
NilpotencyCert<C> cut_nil(const NilpotencyCert<C>& c1,
                          const NilpotencyCert<C>& c2,
                          const Polynomial<C>& x, const Polynomial<C>& y) {
  const auto& U = c1.body.generators;
  if (c2.body.generators.size() != U.size() + 1 ||
      c2.body.generators.back() != y)
    throw std::invalid_argument("cut_nil: c2 must be stated over U,y");
  for (std::size_t i = 0; i < U.size(); ++i)
    if (c2.body.generators[i] != U[i])
      throw std::invalid_argument("cut_nil: generator lists disagree");
  unsigned long k = c1.exponent, m = c2.exponent;
  std::size_t nv = x.nvars();
  const Polynomial<C> xy = x * y;
  const Polynomial<C> c = c2.body.cofactors.back();

  NilpotencyCert<C> out;
  out.element = x;
  out.exponent = (m + 1) * k;
  out.body.target = x.pow((m + 1) * k);
  out.body.generators = U;
  out.body.n_primary = c1.body.n_primary;
  out.body.cofactors.assign(U.size(), Polynomial<C>(nv));
  if (k == 0) {
    // 1 in <U> already
    out.body.cofactors = c1.body.cofactors;
    return out;
  }
  // x^{m+1} = sum (x*w_t) U_t + c*(x*y)
  std::vector<Polynomial<C>> w;
  w.reserve(U.size());
  for (std::size_t t = 0; t < U.size(); ++t)
    w.push_back(x * c2.body.cofactors[t]);
  const Polynomial<C> xm1 = x.pow(m + 1);
  // invariant: x^{(m+1)j} = sum A_t U_t + (c*xy)^j
  std::vector<Polynomial<C>> A = w;
  Polynomial<C> cxy_pow = c * xy;  // (c*xy)^j, j starting at 1
  for (unsigned long j = 1; j < k; ++j) {
    for (std::size_t t = 0; t < U.size(); ++t)
      A[t] = xm1 * A[t] + w[t] * cxy_pow;
    cxy_pow = cxy_pow * (c * xy);
  }
  // substitute (c*xy)^k = c^k * (xy)^k = c^k * sum s_t U_t
  Polynomial<C> ck = c.pow(k);
  for (std::size_t t = 0; t < U.size(); ++t)
    out.body.cofactors[t] = A[t] + ck * c1.body.cofactors[t];
  return out;
}

// Binomial combination: nilpotency of a+b from nilpotency of a and b over the
// same generator list; exponent p+q-1.
template <class C>
NilpotencyCert<C> nilpotent_sum(const NilpotencyCert<C>& ca,
                                const NilpotencyCert<C>& cb) {
  if (ca.body.generators.size() != cb.body.generators.size())
    throw std::invalid_argument("nilpotent_sum: generator lists disagree");
  for (std::size_t i = 0; i < ca.body.generators.size(); ++i)
    if (ca.body.generators[i] != cb.body.generators[i])
      throw std::invalid_argument("nilpotent_sum: generator lists disagree");
  unsigned long p = ca.exponent, q = cb.exponent;
  std::size_t nv = ca.element.nvars();
  NilpotencyCert<C> out;
  out.element = ca.element + cb.element;
  out.body.generators = ca.body.generators;
  out.body.n_primary = ca.body.n_primary;
  out.body.cofactors.assign(out.body.generators.size(), Polynomial<C>(nv));
  if (p == 0) {  // 1 in <U> already
    out.exponent = 0;
    out.body.target = Polynomial<C>::constant(nv, coeff_traits<C>::one());
    out.body.cofactors = ca.body.cofactors;
    return out;
  }
  if (q == 0) {
    out.exponent = 0;
    out.body.target = Polynomial<C>::constant(nv, coeff_traits<C>::one());
    out.body.cofactors = cb.body.cofactors;
    return out;
  }
  unsigned long n = p + q - 1;
  out.exponent = n;
  out.body.target = out.element.pow(n);
  const Polynomial<C>&a = ca.element, &b = cb.element;
  for (unsigned long i = 0; i <= n; ++i) {
    C bin = detail::binomial_coeff<C>(n, i);
    if (i >= p) {
      Polynomial<C> mult =
          a.pow(i - p) * b.pow(n - i);
      for (std::size_t t = 0; t < out.body.generators.size(); ++t)
        out.body.cofactors[t] =
            out.body.cofactors[t] + (mult * ca.body.cofactors[t]).scaled(bin);
    } else {
      // then n-i >= q
      Polynomial<C> mult = a.pow(i) * b.pow(n - i - q);
      for (std::size_t t = 0; t < out.body.generators.size(); ++t)
        out.body.cofactors[t] =
            out.body.cofactors[t] + (mult * cb.body.cofactors[t]).scaled(bin);
    }
  }
  return out;
}

// Nil into Jac: from a^m in <V>, answer any query b with
// 1 = (1-ab)*sum_{i<m}(ab)^i + b^m * (combination for a^m).
template <class C>
JacOracle<C> nil_to_jac(const NilpotencyCert<C>& c) {
  JacOracle<C> orc;
  orc.element = c.element;
  orc.ideal_gens = c.body.generators;
  NilpotencyCert<C> cert = c;
  orc.query = [cert](const Polynomial<C>& b) -> OracleResult<C> {
    std::size_t nv = cert.element.nvars();
    const Polynomial<C> one =
        Polynomial<C>::constant(nv, coeff_traits<C>::one());
    Polynomial<C> ab = cert.element * b;
    MembershipCert<C> out;
    out.target = one;
    out.generators = cert.body.generators;
    out.n_primary = cert.body.n_primary;
    Polynomial<C> bm = b.pow(cert.exponent);
    for (const auto& v : cert.body.cofactors)
      out.cofactors.push_back(bm * v);
    Polynomial<C> geom(nv);
    Polynomial<C> abi = one;
    for (unsigned long i = 0; i < cert.exponent; ++i) {
      geom = geom + abi;
      abi = abi * ab;
    }
    out.generators.push_back(one - ab);
    out.cofactors.push_back(geom);
    return out;
  };
  return orc;
}

// Infinitary cut: from oracles for x relative to U,1-yz (one per queried z),
// an oracle for x*y relative to U. Both generators adjoined along the way
// equal 1-(xy)w and are merged.
template <class C>
JacOracle<C> cut_jac(
    std::function<JacOracle<C>(const Polynomial<C>&)> inner,
    const Polynomial<C>& x, const Polynomial<C>& y,
    std::vector<Polynomial<C>> ideal_gens) {
  JacOracle<C> orc;
  orc.element = x * y;
  orc.ideal_gens = ideal_gens;
  Polynomial<C> xy = x * y;
  orc.query = [inner, x, y, xy](const Polynomial<C>& w) -> OracleResult<C> {
    JacOracle<C> ox = inner(x * w);
    OracleResult<C> res = ox.query(y * w);
    if (std::holds_alternative<Refutation<C>>(res)) return res;
    MembershipCert<C> cert = std::get<MembershipCert<C>>(std::move(res));
    // merge all generators equal to 1 - (xy)w
    std::size_t nv = x.nvars();
    Polynomial<C> adj =
        Polynomial<C>::constant(nv, coeff_traits<C>::one()) - xy * w;
    MembershipCert<C> out;
    out.target = cert.target;
    Polynomial<C> merged(nv);
    bool seen = false;
    for (std::size_t i = 0; i < cert.generators.size(); ++i) {
      if (cert.generators[i] == adj) {
        merged = merged + cert.cofactors[i];
        seen = true;
      } else {
        out.generators.push_back(cert.generators[i]);
        out.cofactors.push_back(cert.cofactors[i]);
      }
    }
    out.n_primary = out.generators.size();
    out.generators.push_back(adj);
    out.cofactors.push_back(merged);
    if (!seen)
      throw std::logic_error("cut_jac: adjoined generator not found");
    return out;
  };
  return orc;
}

// Geometric-series inverse for unit + nilpotent.
template <class C>
UnitCert<C> unit_plus_nilpotent(const UnitCert<C>& u,
                                const NilpotencyCert<C>& m) {
  // u.body: 1 = v*u + sum r_t R_t ; m.body: x^e = sum s_t R_t, same R
  if (u.body.generators.size() != m.body.generators.size() + 1)
    throw std::invalid_argument("unit_plus_nilpotent: generator shape");
  for (std::size_t i = 0; i < m.body.generators.size(); ++i)
    if (u.body.generators[i + 1] != m.body.generators[i])
      throw std::invalid_argument("unit_plus_nilpotent: relation lists differ");
  std::size_t nv = u.element.nvars();
  const Polynomial<C> one =
      Polynomial<C>::constant(nv, coeff_traits<C>::one());
  const Polynomial<C>&v = u.inverse, &x = m.element;
  unsigned long e = m.exponent;
  Polynomial<C> w = (x * v).negated();
  Polynomial<C> geom(nv), wi = one;
  for (unsigned long i = 0; i < e; ++i) {
    geom = geom + wi;
    wi = wi * w;
  }
  // wi == w^e now
  UnitCert<C> out;
  out.element = u.element + x;
  out.inverse = v * geom;
  out.body.target = one;
  out.body.generators.push_back(out.element);
  out.body.cofactors.push_back(out.inverse);
  out.body.n_primary = 0;
  Polynomial<C> sign = ((e % 2) == 0) ? v.pow(e) : v.pow(e).negated();
  for (std::size_t t = 0; t < m.body.generators.size(); ++t) {
    out.body.generators.push_back(m.body.generators[t]);
    out.body.cofactors.push_back(sign * m.body.cofactors[t] +
                                 geom * u.body.cofactors[t + 1]);
  }
  return out;
}

// Rel-to-rel composition: rewrite a certificate over generators G through
// certificates expressing each G_i over a common list H.
template <class C>
MembershipCert<C> compose_through(
    const MembershipCert<C>& cert,
    const std::vector<MembershipCert<C>>& gens_in_h) {
  if (gens_in_h.size() != cert.generators.size())
    throw std::invalid_argument("compose_through: shape mismatch");
  MembershipCert<C> out;
  out.target = cert.target;
  if (gens_in_h.empty()) return out;
  out.generators = gens_in_h[0].generators;
  out.n_primary = gens_in_h[0].n_primary;
  std::size_t nv = cert.target.nvars();
  out.cofactors.assign(out.generators.size(), Polynomial<C>(nv));
  for (std::size_t i = 0; i < cert.generators.size(); ++i) {
    if (gens_in_h[i].target != cert.generators[i])
      throw std::invalid_argument("compose_through: wrong inner target");
    for (std::size_t j = 0; j < out.generators.size(); ++j)
      out.cofactors[j] =
          out.cofactors[j] + cert.cofactors[i] * gens_in_h[i].cofactors[j];
  }
  return out;
}

// Pad a certificate onto a longer generator list that contains its own list
// as a subsequence (zero cofactors elsewhere).
template <class C>
MembershipCert<C> pad_to(const MembershipCert<C>& cert,
                         const std::vector<Polynomial<C>>& gens,
                         std::size_t n_primary) {
  MembershipCert<C> out;
  out.target = cert.target;
  out.generators = gens;
  out.n_primary = n_primary;
  std::size_t nv = cert.target.nvars();
  out.cofactors.assign(gens.size(), Polynomial<C>(nv));
  std::vector<bool> used(gens.size(), false);
  for (std::size_t i = 0; i < cert.generators.size(); ++i) {
    bool placed = false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (!used[j] && gens[j] == cert.generators[i]) {
        out.cofactors[j] = out.cofactors[j] + cert.cofactors[i];
        used[j] = true;
        placed = true;
        break;
      }
    }
    if (!placed) {
      // a repeated generator may match an already-used slot
      for (std::size_t j = 0; j < gens.size() && !placed; ++j) {
        if (gens[j] == cert.generators[i]) {
          out.cofactors[j] = out.cofactors[j] + cert.cofactors[i];
          placed = true;
        }
      }
    }
    if (!placed)
      throw std::invalid_argument("pad_to: generator missing from new list");
  }
  return out;
}

}  // namespace jacradix

#endif  // JACRADIX_CERTIFICATES_HPP
