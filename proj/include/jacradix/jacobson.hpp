#ifndef JACRADIX_JACOBSON_HPP
#define JACRADIX_JACOBSON_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "jacradix/certificates.hpp"
#include "jacradix/ideal.hpp"
#include "jacradix/matrix.hpp"
#include "jacradix/numeric.hpp"
#include "jacradix/polynomial.hpp"

namespace jacradix {

template <class C>
using ExtractResult = std::variant<NilpotencyCert<C>, Refutation<C>>;

// Capability serving one ring level: either produces a verifying nilpotency
// certificate or a refutation naming a failed concrete query.
template <class C>
struct JacobsonExtractor {
  std::function<ExtractResult<C>(const IdealHandle<C>&, const Polynomial<C>&,
                                 const JacOracle<C>&)>
      extract;
};

// Exponent ceiling; certificate towers multiply exponents, and this aborts a
// runaway extraction with a diagnostic instead of running unbounded.
struct GuardrailExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline unsigned long& max_exponent_limit() {
  static unsigned long limit = 1ul << 16;
  return limit;
}

inline void check_guardrail(unsigned long exponent) {
  if (exponent > max_exponent_limit())
    throw GuardrailExceeded("certificate exponent " + std::to_string(exponent) +
                            " exceeds the configured ceiling " +
                            std::to_string(max_exponent_limit()));
}

// Decision-procedure oracle: answers each query by ideal-engine membership of
// 1 in <gens, 1-a*b>. The adjoined generator is always listed last.
template <class C>
JacOracle<C> synthesize_oracle(std::size_t nvars, MonomialOrder order,
                               std::vector<Polynomial<C>> gens,
                               const Polynomial<C>& a) {
  JacOracle<C> orc;
  orc.element = a;
  orc.ideal_gens = gens;
  orc.query = [nvars, order, gens = std::move(gens),
               a](const Polynomial<C>& b) -> OracleResult<C> {
    Polynomial<C> one = Polynomial<C>::constant(nvars, coeff_traits<C>::one());
    Polynomial<C> adj = one - a * b;
    std::vector<Polynomial<C>> all = gens;
    all.push_back(adj);
    IdealHandle<C> h = IdealHandle<C>::complete(nvars, order, all);
    auto res = h.membership(one);
    if (std::holds_alternative<MembershipCert<C>>(res))
      return std::get<MembershipCert<C>>(std::move(res));
    Refutation<C> ref;
    ref.element = a;
    ref.b = b;
    ref.adjoined = adj;
    ref.remainder = std::get<NormalFormTrace<C>>(res).remainder;
    ref.generators = gens;
    return ref;
  };
  return orc;
}

// ---------------------------------------------------------------------------
// The Z level
// ---------------------------------------------------------------------------

// Splitting x = d*e with a nilpotent modulo d and 1 in <a, e>, via the
// successive gcd chain d_1 = gcd(|x|, a), d_2 = gcd(|x|/d_1, a), ...
struct ZSplit {
  Int d;  // positive product d_1...d_{n-1}
  Int e;  // x/d, carries the sign of x
  std::vector<Int> chain;
  unsigned long nil_exponent = 0;  // a^{nil_exponent} = nil_cofactor * d
  Int nil_cofactor;
  Int s, t;  // 1 = s*a + t*e
};

inline ZSplit z_split(const Int& x, const Int& a) {
  if (x == 0) throw std::invalid_argument("z_split: x must be nonzero");
  ZSplit out;
  Int rest = abs(x);
  out.d = 1;
  while (true) {
    Int di = gcd(rest, a);
    out.chain.push_back(di);
    if (di == 1) break;
    out.d *= di;
    rest /= di;
  }
  out.e = x / out.d;
  out.nil_exponent = out.chain.size() - 1;
  Int apow = pow_int(a, out.nil_exponent);
  auto q = divide_exact(out.d, apow);
  if (!q) throw std::logic_error("z_split: chain does not divide the power");
  out.nil_cofactor = *q;
  GcdExt g = gcd_ext(a, out.e);
  if (g.g != 1) throw std::logic_error("z_split: residual not coprime");
  out.s = g.s;
  out.t = g.t;
  return out;
}

namespace detail {

template <class C>
Polynomial<C> cpoly(std::size_t nvars, const C& c) {
  return Polynomial<C>::constant(nvars, c);
}

inline Int constant_int(const Polynomial<Int>& p) {
  if (!p.is_constant())
    throw std::invalid_argument("expected a ground-level constant");
  return p.constant_value();
}

// negate the element of a nilpotency certificate
template <class C>
NilpotencyCert<C> negate_element(const NilpotencyCert<C>& c) {
  NilpotencyCert<C> out = c;
  out.element = c.element.negated();
  if (c.exponent % 2 == 1) {
    out.body.target = out.body.target.negated();
    for (auto& cf : out.body.cofactors) cf = cf.negated();
  }
  return out;
}

}  // namespace detail

// The computational content of "Z is Jacobson": the case split on the sign of
// a, the query at b = -1, the gcd-chain split of the resulting ideal element,
// and a second query at the Bezout coefficient.
inline ExtractResult<Int> z_extract(const IdealHandle<Int>& I,
                                    const Polynomial<Int>& a_poly,
                                    const JacOracle<Int>& oracle) {
  std::size_t nv = I.nvars;
  Int a = detail::constant_int(a_poly);
  auto trivial = [&](unsigned long n) {
    NilpotencyCert<Int> c;
    c.element = a_poly;
    c.exponent = n;
    c.body.target = a_poly.pow(n);
    c.body.generators = I.generators;
    c.body.n_primary = I.n_primary;
    c.body.cofactors.assign(I.generators.size(), Polynomial<Int>(nv));
    return c;
  };
  if (a == 0) return trivial(1);
  if (a < 0) {
    JacOracle<Int> flipped;
    flipped.element = a_poly.negated();
    flipped.ideal_gens = oracle.ideal_gens;
    flipped.query = [&oracle](const Polynomial<Int>& b) {
      return oracle.query(b.negated());
    };
    ExtractResult<Int> sub = z_extract(I, a_poly.negated(), flipped);
    if (std::holds_alternative<Refutation<Int>>(sub)) return sub;
    return detail::negate_element(std::get<NilpotencyCert<Int>>(sub));
  }
  // a >= 1: first query, at b = -1
  Polynomial<Int> minus_one = detail::cpoly(nv, Int(-1));
  OracleResult<Int> r1 = oracle.query(minus_one);
  if (std::holds_alternative<Refutation<Int>>(r1))
    return std::get<Refutation<Int>>(std::move(r1));
  MembershipCert<Int> c1 = std::get<MembershipCert<Int>>(std::move(r1));
  if (c1.generators.size() != I.generators.size() + 1)
    throw std::logic_error("z_extract: unexpected oracle certificate shape");
  Int cm1 = detail::constant_int(c1.cofactors.back());
  Int i1 = 1 - (1 + a) * cm1;
  if (i1 == 0) throw std::logic_error("z_extract: 1 = (1+a)c over Z");
  ZSplit zs = z_split(i1, a);
  // 1 - a*s = t*e, so query at b = s
  OracleResult<Int> r2 = oracle.query(detail::cpoly(nv, zs.s));
  if (std::holds_alternative<Refutation<Int>>(r2))
    return std::get<Refutation<Int>>(std::move(r2));
  MembershipCert<Int> c2 = std::get<MembershipCert<Int>>(std::move(r2));
  Int cb = detail::constant_int(c2.cofactors.back());
  Int i2 = 1 - (1 - a * zs.s) * cb;
  // d = d*i2 + t*cb*i1, both i1, i2 in I with explicit cofactors
  if (zs.d != zs.d * i2 + zs.t * cb * i1)
    throw std::logic_error("z_extract: d recombination failed");
  NilpotencyCert<Int> out;
  out.element = a_poly;
  out.exponent = zs.nil_exponent;
  check_guardrail(out.exponent);
  out.body.target = a_poly.pow(out.exponent);
  out.body.generators = I.generators;
  out.body.n_primary = I.n_primary;
  for (std::size_t i = 0; i < I.generators.size(); ++i) {
    // a^m = k*d = k*d*i2 + k*t*cb*i1
    Polynomial<Int> cof =
        c2.cofactors[i].scaled(Int(zs.nil_cofactor * zs.d)) +
        c1.cofactors[i].scaled(Int(zs.nil_cofactor * zs.t * cb));
    out.body.cofactors.push_back(std::move(cof));
  }
  if (auto bad = verify(out))
    throw std::logic_error("z_extract: invalid certificate: " + bad->what);
  return out;
}

inline JacobsonExtractor<Int> z_extractor() {
  JacobsonExtractor<Int> ex;
  ex.extract = [](const IdealHandle<Int>& I, const Polynomial<Int>& a,
                  const JacOracle<Int>& orc) { return z_extract(I, a, orc); };
  return ex;
}

// ---------------------------------------------------------------------------
// Zero-dimensional levels (discrete fields, Z/n)
// ---------------------------------------------------------------------------

// Smallest e with c*x^{e+1} == x^e (mod n), by solving the linear congruence.
struct ZmodKdim0 {
  unsigned long e = 0;
  Int c;
};

inline ZmodKdim0 kdim0_solve_zmod(const Int& n, const Int& x) {
  if (n <= 1) throw std::invalid_argument("kdim0_solve_zmod: modulus <= 1");
  for (unsigned long e = 0;; ++e) {
    Int A = pow_int(x, e + 1) % n;
    Int B = pow_int(x, e) % n;
    Int g = gcd(A, n);
    if (divide_exact(g, B % n)) {
      Int n2 = n / g;
      if (n2 == 1) return {e, Int(0)};
      GcdExt be = gcd_ext(A / g, n2);
      Int c = ((B / g) * be.s) % n2;
      if (c < 0) c += n2;
      return {e, c};
    }
  }
}

// Full staircase certificate for one element of Z/n: x^e in <x^{e+1}>
// relative to the relation n.
inline KdimCert<Int> kdim0_witness_zmod(const Int& n, const Int& x,
                                        std::size_t nvars = 0) {
  ZmodKdim0 w = kdim0_solve_zmod(n, x);
  KdimCert<Int> out;
  Polynomial<Int> xp = detail::cpoly(nvars, x);
  out.elements = {xp};
  out.exponents = {w.e};
  out.body.target = xp.pow(w.e);
  out.body.generators = {xp.pow(w.e + 1), detail::cpoly(nvars, n)};
  out.body.n_primary = 1;
  Int defect = pow_int(x, w.e) - w.c * pow_int(x, w.e + 1);
  auto z = divide_exact(n, defect);
  if (!z) throw std::logic_error("kdim0_witness_zmod: congruence failed");
  out.body.cofactors = {detail::cpoly(nvars, w.c), detail::cpoly(nvars, *z)};
  return out;
}

// Kdim Z <= 1: the staircase witness for a pair of integers.
inline KdimCert<Int> kdim1_witness_z(const Int& x0, const Int& x1,
                                     std::size_t nvars = 0) {
  KdimCert<Int> out;
  Polynomial<Int> p0 = detail::cpoly(nvars, x0);
  Polynomial<Int> p1 = detail::cpoly(nvars, x1);
  out.elements = {p0, p1};
  if (x0 == 0) {
    out.exponents = {1, 0};
    out.body.target = Polynomial<Int>(nvars);  // x0^1 * x1^0 = 0
    out.body.generators = {p0.pow(2), p0 * p1};
    out.body.n_primary = 2;
    out.body.cofactors = {Polynomial<Int>(nvars), Polynomial<Int>(nvars)};
    return out;
  }
  ZSplit zs = z_split(x0, x1);
  unsigned long e1 = zs.nil_exponent;  // d | x1^{e1}
  out.exponents = {1, e1};
  // x0*x1^{e1}*(1 - s*x1) = x0 * (k*d) * (t*e) = k*t*x0^2
  out.body.target = p0 * p1.pow(e1);
  out.body.generators = {p0.pow(2), p0 * p1.pow(e1 + 1)};
  out.body.n_primary = 2;
  out.body.cofactors = {detail::cpoly(nvars, Int(zs.nil_cofactor * zs.t)),
                        detail::cpoly(nvars, zs.s)};
  if (auto bad = verify(out))
    throw std::logic_error("kdim1_witness_z: invalid certificate: " +
                           bad->what);
  return out;
}

// Zero-dimensionality capability: (e, c) with c*a^{e+1} == a^e modulo <I>.
template <class C>
using Kdim0Capability = std::function<std::pair<unsigned long, Polynomial<C>>(
    const IdealHandle<C>&, const Polynomial<C>&)>;

// Extraction over a zero-dimensional level: multiply the oracle's answer at
// b = c by a^e and absorb a^e(1-ac) through the Kdim witness.
template <class C>
ExtractResult<C> zero_dim_extract(const IdealHandle<C>& I,
                                  const Polynomial<C>& a,
                                  const JacOracle<C>& oracle,
                                  const Kdim0Capability<C>& kdim0) {
  // direct membership covers a in I (including the unit ideal)
  {
    auto res = I.membership(a);
    if (std::holds_alternative<MembershipCert<C>>(res)) {
      NilpotencyCert<C> c;
      c.element = a;
      c.exponent = 1;
      c.body = std::get<MembershipCert<C>>(std::move(res));
      return c;
    }
  }
  auto [e, c] = kdim0(I, a);
  Polynomial<C> defect = a.pow(e) - c * a.pow(e + 1);
  auto dres = I.membership(defect);
  if (std::holds_alternative<NormalFormTrace<C>>(dres))
    throw std::logic_error("zero_dim_extract: Kdim witness defect not in I");
  MembershipCert<C> dcert = std::get<MembershipCert<C>>(std::move(dres));
  OracleResult<C> r = oracle.query(c);
  if (std::holds_alternative<Refutation<C>>(r))
    return std::get<Refutation<C>>(std::move(r));
  MembershipCert<C> cert = std::get<MembershipCert<C>>(std::move(r));
  if (cert.generators.size() != I.generators.size() + 1)
    throw std::logic_error("zero_dim_extract: oracle certificate shape");
  Polynomial<C> cprime = cert.cofactors.back();
  NilpotencyCert<C> out;
  out.element = a;
  out.exponent = e;
  check_guardrail(e);
  out.body.target = a.pow(e);
  out.body.generators = I.generators;
  out.body.n_primary = I.n_primary;
  Polynomial<C> ae = a.pow(e);
  for (std::size_t i = 0; i < I.generators.size(); ++i)
    out.body.cofactors.push_back(ae * cert.cofactors[i] +
                                 cprime * dcert.cofactors[i]);
  if (auto bad = verify(out))
    throw std::logic_error("zero_dim_extract: invalid certificate: " +
                           bad->what);
  return out;
}

// Z/n capability: the effective modulus is the gcd of the constant
// generators (the declared modulus is folded into every ideal).
inline Kdim0Capability<Int> kdim0_capability_zmod() {
  return [](const IdealHandle<Int>& I, const Polynomial<Int>& a) {
    Int gamma = 0;
    for (const auto& g : I.generators)
      if (g.is_constant()) gamma = gcd(gamma, g.constant_value());
    if (gamma <= 1)
      throw std::logic_error("kdim0 over Z/n: no modulus in the ideal");
    ZmodKdim0 w = kdim0_solve_zmod(gamma, detail::constant_int(a));
    return std::make_pair(w.e, detail::cpoly(I.nvars, w.c));
  };
}

// Discrete field capability: a nonzero scalar is invertible with e = 0; zero
// has e = 1 with c = 0. Non-membership cases surface as refuted queries.
inline Kdim0Capability<Rat> kdim0_capability_field() {
  return [](const IdealHandle<Rat>& I, const Polynomial<Rat>& a) {
    if (a.is_zero())
      return std::make_pair(1ul, Polynomial<Rat>(I.nvars));
    if (!a.is_constant())
      throw std::invalid_argument("field level: expected a constant");
    Rat inv = Rat(1) / a.constant_value();
    return std::make_pair(0ul, detail::cpoly(I.nvars, inv));
  };
}

inline JacobsonExtractor<Int> zmod_extractor() {
  JacobsonExtractor<Int> ex;
  auto cap = kdim0_capability_zmod();
  ex.extract = [cap](const IdealHandle<Int>& I, const Polynomial<Int>& a,
                     const JacOracle<Int>& orc) {
    return zero_dim_extract<Int>(I, a, orc, cap);
  };
  return ex;
}

inline JacobsonExtractor<Rat> field_extractor() {
  JacobsonExtractor<Rat> ex;
  auto cap = kdim0_capability_field();
  ex.extract = [cap](const IdealHandle<Rat>& I, const Polynomial<Rat>& a,
                     const JacOracle<Rat>& orc) {
    return zero_dim_extract<Rat>(I, a, orc, cap);
  };
  return ex;
}

// ---------------------------------------------------------------------------
// Invertible polynomials and Snapper's theorem
// ---------------------------------------------------------------------------

template <class C>
struct UnitPolyDecomposition {
  UnitCert<C> constant_part;               // a_0, with its inverse
  std::vector<std::size_t> nil_indices;    // which coefficients (>= 1)
  std::vector<NilpotencyCert<C>> nils;     // a_i nilpotent rel the relations
};

// A[X]^x subset A^x + (Nil_A 0)[X]: peel nilpotent leading coefficients off a
// unit u with known inverse, relative to an X-free relation list.
template <class C>
UnitPolyDecomposition<C> unit_poly_decompose(const UnitCert<C>& inv,
                                             std::size_t xvar,
                                             const IdealHandle<C>& relations) {
  UnitPolyDecomposition<C> out;
  UnitCert<C> cur = inv;
  while (true) {
    long n = cur.element.degree_in(xvar);
    if (n <= 0) break;
    auto uc = coefficients_in(cur.element, xvar);
    Polynomial<C> lead = uc[static_cast<std::size_t>(n)];
    long m = std::max<long>(cur.inverse.degree_in(xvar), 0);
    // guaranteed at exponent m+1; smaller exponents are tried first to keep
    // the certificate (and the geometric-series inverses) small
    unsigned long e = 0;
    std::optional<MembershipCert<C>> body;
    for (unsigned long cand = 1; cand <= static_cast<unsigned long>(m) + 1;
         ++cand) {
      auto mres = relations.membership(lead.pow(cand));
      if (std::holds_alternative<MembershipCert<C>>(mres)) {
        e = cand;
        body = std::get<MembershipCert<C>>(std::move(mres));
        break;
      }
    }
    if (!body)
      throw std::logic_error(
          "unit_poly_decompose: leading coefficient power not in relations");
    NilpotencyCert<C> nc;
    nc.element = lead;
    nc.exponent = e;
    nc.body = std::move(*body);
    out.nil_indices.push_back(static_cast<std::size_t>(n));
    out.nils.push_back(nc);
    // subtract the leading term and continue with the geometric-series inverse
    Polynomial<C> xn = Polynomial<C>::variable(cur.element.nvars(), xvar,
                                               static_cast<unsigned>(n));
    NilpotencyCert<C> neg;
    neg.element = (lead * xn).negated();
    neg.exponent = e;
    neg.body.target = neg.element.pow(e);
    neg.body.generators = nc.body.generators;
    neg.body.n_primary = nc.body.n_primary;
    Polynomial<C> mult =
        (e % 2 == 0) ? xn.pow(e) : xn.pow(e).negated();
    for (const auto& cf : nc.body.cofactors)
      neg.body.cofactors.push_back(cf * mult);
    cur = unit_plus_nilpotent(cur, neg);
  }
  out.constant_part = cur;
  return out;
}

// Assemble nilpotency of f from nilpotency of its coefficients
// (binomial combination term by term).
template <class C>
NilpotencyCert<C> assemble_from_coefficients(
    const Polynomial<C>& f, std::size_t xvar,
    const std::vector<std::pair<unsigned long, NilpotencyCert<C>>>& parts) {
  // parts: (X-degree, certificate for the coefficient)
  std::optional<NilpotencyCert<C>> acc;
  for (const auto& [deg, cert] : parts) {
    Polynomial<C> xi = Polynomial<C>::variable(f.nvars(), xvar,
                                               static_cast<unsigned>(deg));
    NilpotencyCert<C> termc;
    termc.element = cert.element * xi;
    termc.exponent = cert.exponent;
    termc.body.target = termc.element.pow(cert.exponent);
    termc.body.generators = cert.body.generators;
    termc.body.n_primary = cert.body.n_primary;
    Polynomial<C> mult = xi.pow(cert.exponent);
    for (const auto& cf : cert.body.cofactors)
      termc.body.cofactors.push_back(cf * mult);
    acc = acc ? nilpotent_sum(*acc, termc) : termc;
  }
  if (!acc) throw std::invalid_argument("assemble_from_coefficients: empty");
  if (acc->element != f)
    throw std::logic_error("assemble_from_coefficients: sum is not f");
  return *acc;
}

// Snapper: f in Jac_{A[X]}0 implies f nilpotent. The single oracle query is
// at b = X; the rest is invertible-polynomial decomposition.
template <class C>
ExtractResult<C> snapper_extract(std::size_t nvars, MonomialOrder order,
                                 const std::vector<Polynomial<C>>& relations,
                                 std::size_t xvar, const Polynomial<C>& f,
                                 const JacOracle<C>& oracle) {
  std::size_t nv = nvars;
  Polynomial<C> one = Polynomial<C>::constant(nv, coeff_traits<C>::one());
  if (f.is_zero()) {
    NilpotencyCert<C> c;
    c.element = f;
    c.exponent = 1;
    c.body.target = Polynomial<C>(nv);
    c.body.generators = relations;
    c.body.n_primary = relations.size();
    c.body.cofactors.assign(relations.size(), Polynomial<C>(nv));
    return c;
  }
  Polynomial<C> X = Polynomial<C>::variable(nv, xvar);
  OracleResult<C> r = oracle.query(X);
  if (std::holds_alternative<Refutation<C>>(r))
    return std::get<Refutation<C>>(std::move(r));
  MembershipCert<C> q = std::get<MembershipCert<C>>(std::move(r));
  Polynomial<C> u = one - f * X;
  // rearrange into the unit certificate layout (u first, relations after)
  UnitCert<C> ucert;
  ucert.element = u;
  ucert.inverse = q.cofactors.back();
  ucert.body.target = one;
  ucert.body.generators.push_back(u);
  ucert.body.cofactors.push_back(ucert.inverse);
  ucert.body.n_primary = 0;
  for (std::size_t i = 0; i + 1 < q.generators.size(); ++i) {
    ucert.body.generators.push_back(q.generators[i]);
    ucert.body.cofactors.push_back(q.cofactors[i]);
  }
  IdealHandle<C> rel_handle = IdealHandle<C>::complete(nv, order, relations);
  UnitPolyDecomposition<C> dec = unit_poly_decompose(ucert, xvar, rel_handle);
  // coefficient of X^{i} in u is -f_{i-1} for i >= 1
  std::vector<std::pair<unsigned long, NilpotencyCert<C>>> parts;
  for (std::size_t k = 0; k < dec.nils.size(); ++k)
    parts.push_back({dec.nil_indices[k] - 1,
                     detail::negate_element(dec.nils[k])});
  NilpotencyCert<C> out = assemble_from_coefficients(f, xvar, parts);
  check_guardrail(out.exponent);
  if (auto bad = verify(out))
    throw std::logic_error("snapper_extract: invalid certificate: " +
                           bad->what);
  return out;
}

// Replace a nilpotency certificate by one with the smallest exponent the
// engine can certify over the same generator list. Construction-side
// optimization only; verification of the result is still pure replay.
template <class C>
NilpotencyCert<C> shrink_nilpotency(NilpotencyCert<C> c,
                                    const IdealHandle<C>& h) {
  if (c.exponent <= 1) return c;
  for (unsigned long e = 0; e < c.exponent; ++e) {
    auto r = h.membership(c.element.pow(e));
    if (std::holds_alternative<MembershipCert<C>>(r)) {
      c.exponent = e;
      c.body = std::get<MembershipCert<C>>(std::move(r));
      return c;
    }
  }
  return c;
}

template <class C>
NilpotencyCert<C> shrink_nilpotency(NilpotencyCert<C> c, MonomialOrder order) {
  if (c.exponent <= 1) return c;
  IdealHandle<C> h = IdealHandle<C>::complete(
      c.element.nvars(), order, c.body.generators, c.body.n_primary);
  return shrink_nilpotency(std::move(c), h);
}

// ---------------------------------------------------------------------------
// Quitte's lemma and the generalized Emerton lemma
// ---------------------------------------------------------------------------

// Inversion in the subring: from u*t == 1 in B and an integral dependence of
// t over A localized at a, produce a^M in <u> + (relations contracted to A).
template <class C>
NilpotencyCert<C> invert_in_subring(const UnitCert<C>& t_inv,
                                    const IntegralityCert<C>& dep,
                                    const IdealHandle<C>& contracted) {
  const Polynomial<C>& u = t_inv.element;
  const Polynomial<C>& a = dep.localizer;
  std::size_t nv = u.nvars();
  // a^l = u * s + (element of the relation ideal), with
  // s = -(c_{m-1} + c_{m-2} u + ... + c_0 u^{m-1})
  Polynomial<C> s(nv);
  Polynomial<C> upow = Polynomial<C>::constant(nv, coeff_traits<C>::one());
  for (std::size_t j = 0; j < dep.n; ++j) {
    s = s - dep.coeffs[dep.n - 1 - j] * upow;
    upow = upow * u;
  }
  Polynomial<C> E = a.pow(dep.l) - u * s;
  auto res = contracted.membership(E);
  if (std::holds_alternative<NormalFormTrace<C>>(res))
    throw std::logic_error(
        "invert_in_subring: defect does not contract as expected");
  MembershipCert<C> ec = std::get<MembershipCert<C>>(std::move(res));
  NilpotencyCert<C> out;
  out.element = a;
  out.exponent = dep.l;
  out.body.target = a.pow(dep.l);
  out.body.generators.push_back(u);
  out.body.cofactors.push_back(s);
  out.body.n_primary = 1 + ec.n_primary;
  for (std::size_t i = 0; i < ec.generators.size(); ++i) {
    out.body.generators.push_back(ec.generators[i]);
    out.body.cofactors.push_back(ec.cofactors[i]);
  }
  return out;
}

// Oracle for a*a' relative to the contraction of the ambient relations,
// assembled from the a'-oracle, an integral presentation (the distinguished
// relation g_red in xvar), and inversion in the subring.
template <class C>
JacOracle<C> quitte_oracle(const Polynomial<C>& a, const Polynomial<C>& aprime,
                           const JacOracle<C>& aprime_oracle,
                           const Polynomial<C>& g_red, std::size_t xvar,
                           const IdealHandle<C>& ambient,
                           const IdealHandle<C>& contracted) {
  JacOracle<C> orc;
  orc.element = a * aprime;
  orc.ideal_gens = contracted.generators;
  std::size_t nv = a.nvars();
  orc.query = [=, &aprime_oracle, &ambient,
               &contracted](const Polynomial<C>& w) -> OracleResult<C> {
    Polynomial<C> one = Polynomial<C>::constant(nv, coeff_traits<C>::one());
    Polynomial<C> x = a * w;
    Polynomial<C> u = one - aprime * x;
    OracleResult<C> r = aprime_oracle.query(x);
    if (std::holds_alternative<Refutation<C>>(r))
      return std::get<Refutation<C>>(std::move(r));
    MembershipCert<C> cert = std::get<MembershipCert<C>>(std::move(r));
    UnitCert<C> ucert;
    ucert.element = u;
    ucert.inverse = cert.cofactors.back();
    ucert.body.target = one;
    ucert.body.generators.push_back(u);
    ucert.body.cofactors.push_back(ucert.inverse);
    ucert.body.n_primary = 0;
    for (std::size_t i = 0; i + 1 < cert.generators.size(); ++i) {
      ucert.body.generators.push_back(cert.generators[i]);
      ucert.body.cofactors.push_back(cert.cofactors[i]);
    }
    // integral dependence of the inverse over the subring, localized at a
    auto mm = mul_matrix(ucert.inverse, g_red, xvar);
    if (!mm)
      throw std::logic_error("quitte_oracle: degenerate integral relation");
    IntegralityCert<C> dep =
        integrality_cert(ucert.inverse, *mm, char_poly(*mm), ambient);
    NilpotencyCert<C> nil = invert_in_subring(ucert, dep, contracted);
    // Jac via the geometric series, queried at b = a'*w; the generator u and
    // the adjoined generator are both 1-(a a')w and merge.
    JacOracle<C> jorc = nil_to_jac(nil);
    OracleResult<C> jr = jorc.query(aprime * w);
    if (std::holds_alternative<Refutation<C>>(jr))
      return std::get<Refutation<C>>(std::move(jr));
    MembershipCert<C> jc = std::get<MembershipCert<C>>(std::move(jr));
    Polynomial<C> adj = one - (a * aprime) * w;
    MembershipCert<C> out;
    out.target = jc.target;
    Polynomial<C> merged(nv);
    for (std::size_t i = 0; i < jc.generators.size(); ++i) {
      if (jc.generators[i] == adj) {
        merged = merged + jc.cofactors[i];
      } else {
        out.generators.push_back(jc.generators[i]);
        out.cofactors.push_back(jc.cofactors[i]);
      }
    }
    out.n_primary = out.generators.size();
    out.generators.push_back(adj);
    out.cofactors.push_back(merged);
    return out;
  };
  return orc;
}

namespace detail {

// membership certificate "g is the i-th generator"
template <class C>
MembershipCert<C> generator_cert(const std::vector<Polynomial<C>>& gens,
                                 std::size_t i, std::size_t n_primary) {
  MembershipCert<C> c;
  c.target = gens[i];
  c.generators = gens;
  c.n_primary = n_primary;
  std::size_t nv = gens[i].nvars();
  c.cofactors.assign(gens.size(), Polynomial<C>(nv));
  c.cofactors[i] =
      Polynomial<C>::constant(nv, coeff_traits<C>::one());
  return c;
}

// c += mult * inner (cofactor-wise), where inner is over the same list
template <class C>
void add_scaled(MembershipCert<C>& c, const Polynomial<C>& mult,
                const MembershipCert<C>& inner) {
  for (std::size_t i = 0; i < c.cofactors.size(); ++i)
    c.cofactors[i] = c.cofactors[i] + mult * inner.cofactors[i];
}

}  // namespace detail

// Generalized Emerton lemma: a * Jac_B J subset Nil_B J for B with B_a
// integral over A_a. Everything has been flattened: U is the full relation
// list of B (J included), g_red the distinguished integral relation with
// leading coefficient a in xvar, and `base` serves the subring (the first
// `prefix` variables).
template <class C>
ExtractResult<C> emerton_extract(const JacobsonExtractor<C>& base,
                                 const Polynomial<C>& a,
                                 const Polynomial<C>& g_red, std::size_t xvar,
                                 std::size_t prefix,
                                 const IdealHandle<C>& B_handle,
                                 const MembershipCert<C>& g_red_cert,
                                 const Polynomial<C>& f,
                                 const JacOracle<C>& f_oracle) {
  std::size_t nv = a.nvars();
  const std::vector<Polynomial<C>>& U = B_handle.generators;
  Polynomial<C> one = Polynomial<C>::constant(nv, coeff_traits<C>::one());
  // integral dependence of f over the subring localized at a
  auto mm = mul_matrix(f, g_red, xvar);
  if (!mm) throw std::logic_error("emerton_extract: degenerate relation");
  IntegralityCert<C> dep = integrality_cert(f, *mm, char_poly(*mm), B_handle);
  std::size_t ne = dep.n;
  unsigned long L = dep.l;
  // g_k = a^L f^k + c_{ne-1} f^{k-1} + ... + c_{ne-k}
  std::vector<Polynomial<C>> gk(ne + 1);
  gk[0] = a.pow(L);
  for (std::size_t k = 1; k <= ne; ++k)
    gk[k] = gk[k - 1] * f + dep.coeffs[ne - k];
  // generator lists: U_k = U ++ [g_{ne-1}, ..., g_k]
  auto list_for = [&](std::size_t k) {
    std::vector<Polynomial<C>> l = U;
    for (std::size_t j = ne; j-- > k;) l.push_back(gk[j]);
    return l;
  };
  // base of the induction: (a f)^L = f^L * g_0
  NilpotencyCert<C> current;
  current.element = a * f;
  current.exponent = L;
  current.body.target = (a * f).pow(L);
  current.body.generators = list_for(0);
  current.body.n_primary = B_handle.n_primary;
  current.body.cofactors.assign(current.body.generators.size(),
                                Polynomial<C>(nv));
  current.body.cofactors.back() = f.pow(L);
  for (std::size_t k = 1; k <= ne; ++k) {
    std::vector<Polynomial<C>> Uk = list_for(k);
    Polynomial<C> ap = dep.coeffs[ne - k];  // a_{n-k} = g_k - f g_{k-1}
    if ((gk[k] - f * gk[k - 1]) != ap)
      throw std::logic_error("emerton_extract: telescoping identity failed");
    // membership certificate for g_k over U_k
    MembershipCert<C> gk_cert;
    if (k < ne) {
      gk_cert = detail::generator_cert(Uk, Uk.size() - 1, B_handle.n_primary);
    } else {
      gk_cert = dep.body;  // g_ne is the dependence itself, over U
    }
    NilpotencyCert<C> xy_nil;  // (a f g_{k-1})^p over U_k
    if (ap.is_zero()) {
      // a f g_{k-1} = a g_k - a*ap = a g_k: direct membership of the product
      xy_nil.element = a * f * gk[k - 1];
      xy_nil.exponent = 1;
      xy_nil.body.target = xy_nil.element;
      xy_nil.body.generators = Uk;
      xy_nil.body.n_primary = B_handle.n_primary;
      xy_nil.body.cofactors.assign(Uk.size(), Polynomial<C>(nv));
      detail::add_scaled(xy_nil.body, a, gk_cert);
    } else {
      // oracle for a_{n-k} relative to U_k, via the f-oracle at -g_{k-1}b
      JacOracle<C> ap_oracle;
      ap_oracle.element = ap;
      ap_oracle.ideal_gens = Uk;
      auto gkm1 = gk[k - 1];
      ap_oracle.query = [&, Uk, gkm1, ap,
                         gk_cert](const Polynomial<C>& b) -> OracleResult<C> {
        OracleResult<C> r = f_oracle.query((gkm1 * b).negated());
        if (std::holds_alternative<Refutation<C>>(r))
          return std::get<Refutation<C>>(std::move(r));
        MembershipCert<C> c = std::get<MembershipCert<C>>(std::move(r));
        // 1 + f g_{k-1} b = (1 - a_{n-k} b) + g_k b
        Polynomial<C> hprime = c.cofactors.back();
        MembershipCert<C> out;
        out.target = one;
        out.generators = Uk;
        out.n_primary = B_handle.n_primary;
        out.cofactors.assign(Uk.size(), Polynomial<C>(nv));
        for (std::size_t i = 0; i < U.size(); ++i)
          out.cofactors[i] = c.cofactors[i];
        detail::add_scaled(out, hprime * b, gk_cert);
        out.generators.push_back(one - ap * b);
        out.cofactors.push_back(hprime);
        return out;
      };
      // contract B_k's relation ideal to the subring
      IdealHandle<C> Uk_handle =
          IdealHandle<C>::complete(nv, B_handle.order, Uk, B_handle.n_primary);
      ContractionResult<C> Ak = contraction(Uk_handle, prefix);
      JacOracle<C> q_orc = quitte_oracle(a, ap, ap_oracle, g_red, xvar,
                                         Uk_handle, Ak.handle);
      ExtractResult<C> br = base.extract(Ak.handle, a * ap, q_orc);
      if (std::holds_alternative<Refutation<C>>(br))
        return std::get<Refutation<C>>(std::move(br));
      NilpotencyCert<C> pc = std::get<NilpotencyCert<C>>(std::move(br));
      // lift the contracted certificate back to U_k via the contraction's
      // own transform rows
      MembershipCert<C> lifted = compose_through(pc.body, Ak.certs);
      // (a f g_{k-1})^p = sum_{j>=1} C(p,j)(-a a')^{p-j} a^j g_k^{j-1} * g_k
      //                  + (-1)^p (a a')^p
      unsigned long p = pc.exponent;
      xy_nil.element = a * f * gk[k - 1];
      xy_nil.exponent = p;
      check_guardrail(p);
      xy_nil.body.target = xy_nil.element.pow(p);
      xy_nil.body.generators = Uk;
      xy_nil.body.n_primary = B_handle.n_primary;
      xy_nil.body.cofactors.assign(Uk.size(), Polynomial<C>(nv));
      Polynomial<C> aap = (a * ap).negated();
      for (unsigned long j = 1; j <= p; ++j) {
        C bin = detail::binomial_coeff<C>(p, j);
        Polynomial<C> mult =
            (aap.pow(p - j) * a.pow(j) * gk[k].pow(j - 1)).scaled(bin);
        detail::add_scaled(xy_nil.body, mult, gk_cert);
      }
      C sign = (p % 2 == 0) ? coeff_traits<C>::one() : -coeff_traits<C>::one();
      for (std::size_t i = 0; i < Uk.size(); ++i)
        xy_nil.body.cofactors[i] =
            xy_nil.body.cofactors[i] + lifted.cofactors[i].scaled(sign);
    }
    xy_nil = shrink_nilpotency(std::move(xy_nil), B_handle.order);
    current = cut_nil(xy_nil, current, a * f, gk[k - 1]);
    check_guardrail(current.exponent);
    current = shrink_nilpotency(std::move(current), B_handle.order);
  }
  (void)g_red_cert;
  if (auto bad = verify(current))
    throw std::logic_error("emerton_extract: invalid certificate: " +
                           bad->what);
  return current;
}

// ---------------------------------------------------------------------------
// The general Nullstellensatz and the iterated pipeline
// ---------------------------------------------------------------------------

// One-variable lifting: extraction over A[X] relative to a finitely generated
// J, given an extractor for A (the first `xvar` variables).
template <class C>
ExtractResult<C> nullstellensatz_extract(const JacobsonExtractor<C>& base,
                                         const IdealHandle<C>& J,
                                         const Polynomial<C>& f,
                                         const JacOracle<C>& oracle,
                                         std::size_t xvar) {
  std::size_t nv = J.nvars;
  Polynomial<C> one = Polynomial<C>::constant(nv, coeff_traits<C>::one());
  // f in J: exponent 1 outright
  {
    auto res = J.membership(f);
    if (std::holds_alternative<MembershipCert<C>>(res)) {
      NilpotencyCert<C> c;
      c.element = f;
      c.exponent = 1;
      c.body = std::get<MembershipCert<C>>(std::move(res));
      return c;
    }
  }
  // Over a field with one variable the ideal is principal, and a refuting
  // query can be computed directly: strip from the generator every factor
  // shared with f; if anything of positive degree remains, f is invertible
  // modulo it and b = f^{-1} forces 1 - f*b into a proper ideal. The oracle
  // still supplies (and checks) the actual refutation.
  if constexpr (coeff_traits<C>::is_field) {
    if (xvar == 0 && J.basis.size() == 1 && J.basis[0].degree_in(0) >= 1) {
      Polynomial<C> s = J.basis[0];
      while (s.degree_in(0) >= 1) {
        IdealHandle<C> gh = IdealHandle<C>::complete(nv, J.order, {s, f});
        if (gh.basis.size() != 1) break;
        Polynomial<C> d = gh.basis[0];
        if (d.degree_in(0) <= 0) {
          // f invertible mod s: 1 = alpha*s + beta*f, so b := beta refutes
          auto inv = gh.membership(
              Polynomial<C>::constant(nv, coeff_traits<C>::one()));
          if (std::holds_alternative<MembershipCert<C>>(inv)) {
            Polynomial<C> b = std::get<MembershipCert<C>>(inv).cofactors[1];
            OracleResult<C> rr = oracle.query(b);
            if (std::holds_alternative<Refutation<C>>(rr))
              return std::get<Refutation<C>>(std::move(rr));
          }
          break;
        }
        IdealHandle<C> dh = IdealHandle<C>::complete(nv, J.order, {d});
        auto qq = dh.normal_form(s);
        if (!qq.remainder.is_zero()) break;
        s = qq.quotients[0];
      }
    }
  }
  Polynomial<C> X = Polynomial<C>::variable(nv, xvar);
  OracleResult<C> r = oracle.query(X);
  if (std::holds_alternative<Refutation<C>>(r))
    return std::get<Refutation<C>>(std::move(r));
  MembershipCert<C> q = std::get<MembershipCert<C>>(std::move(r));
  Polynomial<C> h = q.cofactors.back();
  Polynomial<C> g = one - h * (one - f * X);  // in <J>, with cofactors q
  std::vector<Polynomial<C>> coeffs = coefficients_in(g, xvar);
  long n = static_cast<long>(coeffs.size()) - 1;
  // base case: 1 = h(1-fX) + sum X^i a_i is exact, so 1-fX is a unit
  // relative to the coefficient list alone
  UnitCert<C> ucert;
  ucert.element = one - f * X;
  ucert.inverse = h;
  ucert.body.target = one;
  ucert.body.generators.push_back(ucert.element);
  ucert.body.cofactors.push_back(h);
  ucert.body.n_primary = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    ucert.body.generators.push_back(coeffs[i]);
    ucert.body.cofactors.push_back(
        Polynomial<C>::variable(nv, xvar, static_cast<unsigned>(i)));
  }
  IdealHandle<C> coeff_handle =
      IdealHandle<C>::complete(nv, J.order, coeffs);
  NilpotencyCert<C> current;
  if (auto direct = coeff_handle.membership(f);
      std::holds_alternative<MembershipCert<C>>(direct)) {
    // f already lies in the coefficient ideal (always the case when the
    // coefficients span a unit); skip the decomposition
    current.element = f;
    current.exponent = 1;
    current.body = std::get<MembershipCert<C>>(std::move(direct));
  } else {
    UnitPolyDecomposition<C> dec =
        unit_poly_decompose(ucert, xvar, coeff_handle);
    std::vector<std::pair<unsigned long, NilpotencyCert<C>>> parts;
    for (std::size_t k = 0; k < dec.nils.size(); ++k)
      parts.push_back({dec.nil_indices[k] - 1,
                       detail::negate_element(dec.nils[k])});
    if (parts.empty()) {
      // f has no nonzero coefficient... only possible for f = 0
      current.element = f;
      current.exponent = 1;
      current.body.target = f;
      current.body.generators = coeffs;
      current.body.n_primary = coeffs.size();
      current.body.cofactors.assign(coeffs.size(), Polynomial<C>(nv));
      if (!f.is_zero())
        throw std::logic_error("nullstellensatz_extract: empty decomposition");
    } else {
      current = assemble_from_coefficients(f, xvar, parts);
    }
  }
  // generator list for C_k: J ++ [a_n, ..., a_{k+1}]
  auto list_for = [&](long k) {
    std::vector<Polynomial<C>> l = J.generators;
    for (long j = n; j > k; --j) l.push_back(coeffs[static_cast<std::size_t>(j)]);
    return l;
  };
  current.body = pad_to(current.body, list_for(-1), J.n_primary);
  for (long k = 0; k <= n; ++k) {
    std::vector<Polynomial<C>> Uk = list_for(k);
    const Polynomial<C>& ak = coeffs[static_cast<std::size_t>(k)];
    NilpotencyCert<C> xy_nil;  // a_k * f nilpotent over U_k
    if (ak.is_zero()) {
      xy_nil.element = Polynomial<C>(nv);
      xy_nil.exponent = 1;
      xy_nil.body.target = Polynomial<C>(nv);
      xy_nil.body.generators = Uk;
      xy_nil.body.n_primary = J.n_primary;
      xy_nil.body.cofactors.assign(Uk.size(), Polynomial<C>(nv));
    } else if (k == 0) {
      // a_0 = g - sum_{i>=1} a_i X^i lies in <U_0> explicitly
      MembershipCert<C> a0c;
      a0c.target = ak;
      a0c.generators = Uk;
      a0c.n_primary = J.n_primary;
      a0c.cofactors.assign(Uk.size(), Polynomial<C>(nv));
      for (std::size_t i = 0; i < J.generators.size(); ++i)
        a0c.cofactors[i] = q.cofactors[i];  // g's J-cofactors... see below
      // g = 1 - h(1-fX) = sum_i q.cofactors[i] J_i (the adjoined cofactor
      // cancels); subtract the higher coefficients
      for (long j = n; j > 0; --j) {
        std::size_t pos = J.generators.size() + static_cast<std::size_t>(n - j);
        a0c.cofactors[pos] =
            a0c.cofactors[pos] -
            Polynomial<C>::variable(nv, xvar, static_cast<unsigned>(j));
      }
      xy_nil.element = ak * f;
      xy_nil.exponent = 1;
      xy_nil.body.target = ak * f;
      xy_nil.body.generators = Uk;
      xy_nil.body.n_primary = J.n_primary;
      xy_nil.body.cofactors.assign(Uk.size(), Polynomial<C>(nv));
      detail::add_scaled(xy_nil.body, f, a0c);
    } else {
      // g_red = a_k X^k + ... + a_0, of degree k with leading coefficient a_k
      Polynomial<C> g_red(nv);
      for (long j = 0; j <= k; ++j)
        g_red = g_red + coeffs[static_cast<std::size_t>(j)] *
                            Polynomial<C>::variable(nv, xvar,
                                                    static_cast<unsigned>(j));
      IdealHandle<C> Uk_handle =
          IdealHandle<C>::complete(nv, J.order, Uk, J.n_primary);
      auto grc = Uk_handle.membership(g_red);
      if (std::holds_alternative<NormalFormTrace<C>>(grc))
        throw std::logic_error("nullstellensatz_extract: g_red not in U_k");
      // f-oracle padded onto U_k
      JacOracle<C> f_oracle_k;
      f_oracle_k.element = f;
      f_oracle_k.ideal_gens = Uk;
      f_oracle_k.query = [&oracle, Uk,
                          np = J.n_primary](const Polynomial<C>& b)
          -> OracleResult<C> {
        OracleResult<C> rr = oracle.query(b);
        if (std::holds_alternative<Refutation<C>>(rr))
          return std::get<Refutation<C>>(std::move(rr));
        MembershipCert<C> cc = std::get<MembershipCert<C>>(std::move(rr));
        std::vector<Polynomial<C>> withadj = Uk;
        withadj.push_back(cc.generators.back());
        MembershipCert<C> padded = pad_to(cc, withadj, np);
        return padded;
      };
      ExtractResult<C> er = emerton_extract(
          base, ak, g_red, xvar, xvar, Uk_handle,
          std::get<MembershipCert<C>>(std::move(grc)), f, f_oracle_k);
      if (std::holds_alternative<Refutation<C>>(er))
        return std::get<Refutation<C>>(std::move(er));
      xy_nil = std::get<NilpotencyCert<C>>(std::move(er));
      // emerton yields a_k * f; reconcile element orientation
      xy_nil.element = ak * f;
    }
    xy_nil = shrink_nilpotency(std::move(xy_nil), J.order);
    current = cut_nil(xy_nil, current, f, ak);
    check_guardrail(current.exponent);
    current = shrink_nilpotency(std::move(current), J.order);
  }
  if (auto bad = verify(current))
    throw std::logic_error("nullstellensatz_extract: invalid certificate: " +
                           bad->what);
  return current;
}

// ---------------------------------------------------------------------------
// Ground rings and the iterated multivariate pipeline
// ---------------------------------------------------------------------------

struct GroundRing {
  enum Kind { Z, Q, Zmod } kind = Z;
  Int modulus;  // Zmod only
};

template <class C>
JacobsonExtractor<C> ground_extractor(const GroundRing& g) {
  if constexpr (coeff_traits<C>::is_field) {
    if (g.kind != GroundRing::Q)
      throw std::invalid_argument("ground ring / coefficient type mismatch");
    return field_extractor();
  } else {
    if (g.kind == GroundRing::Z) return z_extractor();
    if (g.kind == GroundRing::Zmod) return zmod_extractor();
    throw std::invalid_argument("ground ring / coefficient type mismatch");
  }
}

// Extractor for ground[v_0..v_{level-1}], one Nullstellensatz lift per
// variable.
template <class C>
JacobsonExtractor<C> tower_extractor(const GroundRing& g, std::size_t level) {
  if (level == 0) return ground_extractor<C>(g);
  JacobsonExtractor<C> below = tower_extractor<C>(g, level - 1);
  JacobsonExtractor<C> ex;
  ex.extract = [below, level](const IdealHandle<C>& I, const Polynomial<C>& a,
                              const JacOracle<C>& orc) {
    return nullstellensatz_extract<C>(below, I, a, orc, level - 1);
  };
  return ex;
}

// Whole-pipeline entry point: fold the ground modulus into the ideal,
// synthesize the top-level oracle, and run the tower.
template <class C>
ExtractResult<C> iterated_extract(const GroundRing& g, std::size_t nvars,
                                  std::vector<Polynomial<C>> J_gens,
                                  const Polynomial<C>& f,
                                  std::function<void(const Polynomial<C>&, bool)>
                                      trace = nullptr) {
  if constexpr (!coeff_traits<C>::is_field) {
    if (g.kind == GroundRing::Zmod)
      J_gens.push_back(Polynomial<C>::constant(nvars, C(g.modulus)));
  }
  MonomialOrder ord = MonomialOrder::block_elim(0);
  IdealHandle<C> J = IdealHandle<C>::complete(nvars, ord, J_gens);
  JacOracle<C> top = synthesize_oracle<C>(nvars, ord, J_gens, f);
  if (trace) {
    auto inner = top.query;
    top.query = [inner, trace](const Polynomial<C>& b) {
      OracleResult<C> r = inner(b);
      trace(b, std::holds_alternative<MembershipCert<C>>(r));
      return r;
    };
  }
  return tower_extractor<C>(g, nvars).extract(J, f, top);
}

}  // namespace jacradix

#endif  // JACRADIX_JACOBSON_HPP
