#ifndef JACRADIX_IDEAL_HPP
#define JACRADIX_IDEAL_HPP

#include <deque>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jacradix/certificates.hpp"
#include "jacradix/monomial.hpp"
#include "jacradix/numeric.hpp"
#include "jacradix/polynomial.hpp"

namespace jacradix {

enum class Engine {
  EuclidZ,
  EuclidUnivariateField,
  BuchbergerField,
  StrongGroebnerZ,
};

template <class C>
struct NormalFormTrace {
  Polynomial<C> input;
  Polynomial<C> remainder;
  std::vector<Polynomial<C>> quotients;  // against the completed basis
};

// A finitely generated ideal together with a completed basis (Euclid /
// Buchberger / strong Groebner over Z) and a transform matrix expressing each
// basis element as an explicit combination of the original generators.
template <class C>
class IdealHandle {
 public:
  std::size_t nvars = 0;
  MonomialOrder order;
  std::vector<Polynomial<C>> generators;
  std::size_t n_primary = 0;  // generators past this index are relation fold
  std::vector<Polynomial<C>> basis;
  std::vector<std::vector<Polynomial<C>>> transform;
  Engine engine = Engine::BuchbergerField;

  static IdealHandle complete(std::size_t nvars, MonomialOrder order,
                              std::vector<Polynomial<C>> gens,
                              std::size_t n_primary_hint =
                                  static_cast<std::size_t>(-1)) {
    IdealHandle h;
    h.nvars = nvars;
    h.order = order;
    h.generators = std::move(gens);
    h.n_primary = n_primary_hint == static_cast<std::size_t>(-1)
                      ? h.generators.size()
                      : n_primary_hint;
    if constexpr (coeff_traits<C>::is_field) {
      h.engine = nvars <= 1 ? Engine::EuclidUnivariateField
                            : Engine::BuchbergerField;
    } else {
      h.engine = nvars == 0 ? Engine::EuclidZ : Engine::StrongGroebnerZ;
    }
    h.run_completion();
    return h;
  }

  bool contains_unit() const {
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero() &&
           coeff_traits<C>::is_unit(basis[0].constant_value());
  }

  // Canonical normal form with quotient tracking:
  // input == sum quotients_j * basis_j + remainder, remainder irreducible.
  NormalFormTrace<C> normal_form(const Polynomial<C>& p) const {
    NormalFormTrace<C> tr;
    tr.input = p;
    tr.quotients.assign(basis.size(), Polynomial<C>(nvars));
    Polynomial<C> r = p;
    std::vector<Monomial> done;
    auto finalized = [&](const Monomial& m) {
      for (const auto& d : done)
        if (d == m) return true;
      return false;
    };
    while (true) {
      // ord-largest unfinalized term
      const Monomial* pick = nullptr;
      C c = coeff_traits<C>::zero();
      for (const auto& t : r.terms()) {
        if (finalized(t.m)) continue;
        if (!pick || order.less(*pick, t.m)) {
          pick = &t.m;
          c = t.c;
        }
      }
      if (!pick) break;
      Monomial m = *pick;
      std::vector<std::size_t> applicable;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        std::size_t li = basis[j].leading_index(order);
        if (basis[j].terms()[li].m.divides(m)) applicable.push_back(j);
      }
      if (applicable.empty()) {
        done.push_back(m);
        continue;
      }
      if constexpr (coeff_traits<C>::is_field) {
        std::size_t j = applicable[0];
        std::size_t li = basis[j].leading_index(order);
        const auto& lt = basis[j].terms()[li];
        C q = c * coeff_traits<C>::inverse(lt.c);
        Monomial delta = lt.m.quotient_of(m);
        r = r - basis[j].times_term(delta, q);
        tr.quotients[j] = tr.quotients[j] + Polynomial<C>::term(delta, q);
      } else {
        // gcd of all applicable leading coefficients, with Bezout multipliers
        Int gamma = 0;
        std::vector<Int> bez(applicable.size(), Int(0));
        for (std::size_t k = 0; k < applicable.size(); ++k) {
          std::size_t j = applicable[k];
          std::size_t li = basis[j].leading_index(order);
          const Int& lc = basis[j].terms()[li].c;
          if (k == 0) {
            gamma = lc;
            bez[0] = 1;
          } else {
            GcdExt e = gcd_ext(gamma, lc);
            for (std::size_t kk = 0; kk < k; ++kk) bez[kk] *= e.s;
            bez[k] = e.t;
            gamma = e.g;
          }
        }
        Int q, rr;
        fdiv_qr(q, rr, c, gamma);
        if (q != 0) {
          for (std::size_t k = 0; k < applicable.size(); ++k) {
            if (bez[k] == 0) continue;
            std::size_t j = applicable[k];
            std::size_t li = basis[j].leading_index(order);
            Monomial delta = basis[j].terms()[li].m.quotient_of(m);
            Int mult = q * bez[k];
            r = r - basis[j].times_term(delta, mult);
            tr.quotients[j] =
                tr.quotients[j] + Polynomial<C>::term(delta, mult);
          }
        }
        done.push_back(m);
      }
    }
    tr.remainder = r;
    return tr;
  }

  // Membership with cofactors against the ORIGINAL generators.
  std::variant<MembershipCert<C>, NormalFormTrace<C>> membership(
      const Polynomial<C>& t) const {
    NormalFormTrace<C> tr = normal_form(t);
    if (!tr.remainder.is_zero()) return tr;
    MembershipCert<C> cert;
    cert.target = t;
    cert.generators = generators;
    cert.n_primary = n_primary;
    cert.cofactors.assign(generators.size(), Polynomial<C>(nvars));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (tr.quotients[j].is_zero()) continue;
      for (std::size_t i = 0; i < generators.size(); ++i)
        cert.cofactors[i] = cert.cofactors[i] + tr.quotients[j] * transform[j][i];
    }
    return cert;
  }

  bool contains(const Polynomial<C>& t) const {
    return normal_form(t).remainder.is_zero();
  }

 private:
  struct Pending {
    Polynomial<C> poly;
    std::vector<Polynomial<C>> row;  // over original generators
  };

  void run_completion() {
    basis.clear();
    transform.clear();
    std::deque<Pending> queue;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i].is_zero()) continue;
      std::vector<Polynomial<C>> row(generators.size(), Polynomial<C>(nvars));
      row[i] = Polynomial<C>::constant(nvars, coeff_traits<C>::one());
      queue.push_back({generators[i], std::move(row)});
    }
    while (!queue.empty()) {
      Pending w = std::move(queue.front());
      queue.pop_front();
      NormalFormTrace<C> tr = normal_form(w.poly);
      if (tr.remainder.is_zero()) continue;
      Polynomial<C> b = tr.remainder;
      std::vector<Polynomial<C>> row = std::move(w.row);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (tr.quotients[j].is_zero()) continue;
        for (std::size_t i = 0; i < row.size(); ++i)
          row[i] = row[i] - tr.quotients[j] * transform[j][i];
      }
      normalize(b, row);
      if (b.is_constant() && coeff_traits<C>::is_unit(b.constant_value())) {
        // unit ideal detected: collapse to the single basis element 1
        C inv = coeff_traits<C>::inverse(b.constant_value());
        basis.assign(1, Polynomial<C>::constant(nvars, coeff_traits<C>::one()));
        transform.clear();
        for (auto& e : row) e = e.scaled(inv);
        transform.push_back(std::move(row));
        return;
      }
      std::size_t n = basis.size();
      basis.push_back(b);
      transform.push_back(std::move(row));
      for (std::size_t k = 0; k < n; ++k) enqueue_pairs(queue, k, n);
    }
    interreduce();
  }

  void normalize(Polynomial<C>& b, std::vector<Polynomial<C>>& row) const {
    std::size_t li = b.leading_index(order);
    const C& lc = b.terms()[li].c;
    if constexpr (coeff_traits<C>::is_field) {
      C inv = coeff_traits<C>::inverse(lc);
      b = b.scaled(inv);
      for (auto& e : row) e = e.scaled(inv);
    } else {
      if (lc < 0) {
        b = b.negated();
        for (auto& e : row) e = e.negated();
      }
    }
  }

  void enqueue_pairs(std::deque<Pending>& queue, std::size_t k,
                     std::size_t n) {
    const Polynomial<C>&f = basis[k], &g = basis[n];
    std::size_t lif = f.leading_index(order), lig = g.leading_index(order);
    const Monomial &mf = f.terms()[lif].m, &mg = g.terms()[lig].m;
    const C &cf = f.terms()[lif].c, &cg = g.terms()[lig].c;
    Monomial L = lcm(mf, mg);
    Monomial df = mf.quotient_of(L), dg = mg.quotient_of(L);
    if constexpr (coeff_traits<C>::is_field) {
      // S-polynomial
      C qf = coeff_traits<C>::inverse(cf), qg = coeff_traits<C>::inverse(cg);
      Pending p;
      p.poly = f.times_term(df, qf) - g.times_term(dg, qg);
      p.row = combine_rows(k, df, qf, n, dg, -qg);
      queue.push_back(std::move(p));
    } else {
      Int cl = lcm(cf, cg);
      Int af = cl / cf, ag = cl / cg;
      Pending sp;
      sp.poly = f.times_term(df, af) - g.times_term(dg, ag);
      sp.row = combine_rows(k, df, af, n, dg, -ag);
      queue.push_back(std::move(sp));
      // G-polynomial: only needed when neither lc divides the other
      if (!mpz_divisible_p(cg.get_mpz_t(), cf.get_mpz_t()) &&
          !mpz_divisible_p(cf.get_mpz_t(), cg.get_mpz_t())) {
        GcdExt e = gcd_ext(cf, cg);
        Pending gp;
        gp.poly = f.times_term(df, e.s) + g.times_term(dg, e.t);
        gp.row = combine_rows(k, df, e.s, n, dg, e.t);
        queue.push_back(std::move(gp));
      }
    }
  }

  std::vector<Polynomial<C>> combine_rows(std::size_t k, const Monomial& dk,
                                          const C& ck, std::size_t n,
                                          const Monomial& dn,
                                          const C& cn) const {
    std::vector<Polynomial<C>> row(generators.size(), Polynomial<C>(nvars));
    for (std::size_t i = 0; i < row.size(); ++i)
      row[i] = transform[k][i].times_term(dk, ck) +
               transform[n][i].times_term(dn, cn);
    return row;
  }

  void interreduce() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        IdealHandle sub;
        sub.nvars = nvars;
        sub.order = order;
        for (std::size_t k = 0; k < basis.size(); ++k) {
          if (k == j) continue;
          sub.basis.push_back(basis[k]);
        }
        NormalFormTrace<C> tr = sub.normal_form(basis[j]);
        if (tr.remainder == basis[j]) continue;
        // fold quotient rows back through the transform
        std::vector<Polynomial<C>> row = transform[j];
        std::size_t qi = 0;
        for (std::size_t k = 0; k < basis.size(); ++k) {
          if (k == j) continue;
          if (!tr.quotients[qi].is_zero())
            for (std::size_t i = 0; i < row.size(); ++i)
              row[i] = row[i] - tr.quotients[qi] * transform[k][i];
          ++qi;
        }
        if (tr.remainder.is_zero()) {
          basis.erase(basis.begin() + static_cast<long>(j));
          transform.erase(transform.begin() + static_cast<long>(j));
        } else {
          Polynomial<C> b = tr.remainder;
          normalize(b, row);
          basis[j] = std::move(b);
          transform[j] = std::move(row);
        }
        changed = true;
        break;
      }
    }
  }
};

// Ring tower descriptor: base ring is carried by the coefficient type, the
// quotient structure by a completed relation ideal.
template <class C>
struct RingCtx {
  std::vector<std::string> vars;
  MonomialOrder order;
  std::vector<Polynomial<C>> relations;
  std::optional<Int> declared_modulus;
  std::shared_ptr<const IdealHandle<C>> rel_handle;  // completed relations

  std::size_t nvars() const { return vars.size(); }
  bool has_relations() const {
    return rel_handle && !rel_handle->generators.empty();
  }
};

template <class C>
RingCtx<C> make_ctx(std::vector<std::string> vars, MonomialOrder order,
                    std::vector<Polynomial<C>> relations,
                    std::optional<Int> declared_modulus = std::nullopt) {
  RingCtx<C> ctx;
  ctx.vars = std::move(vars);
  ctx.order = order;
  ctx.relations = std::move(relations);
  ctx.declared_modulus = std::move(declared_modulus);
  ctx.rel_handle = std::make_shared<IdealHandle<C>>(
      IdealHandle<C>::complete(ctx.vars.size(), order, ctx.relations));
  return ctx;
}

// Canonical representative in the quotient; equality in the quotient is
// equality of normal forms.
template <class C>
Polynomial<C> quotient_nf(const RingCtx<C>& ctx, const Polynomial<C>& p) {
  if (!ctx.rel_handle) return p;
  return ctx.rel_handle->normal_form(p).remainder;
}

// Completion of user generators inside a ctx: the relation fold is appended
// to the generator list so every certificate stays flat.
template <class C>
IdealHandle<C> complete_in_ctx(const RingCtx<C>& ctx,
                               std::vector<Polynomial<C>> gens) {
  std::size_t np = gens.size();
  for (const auto& r : ctx.relations) gens.push_back(r);
  return IdealHandle<C>::complete(ctx.nvars(), ctx.order, std::move(gens), np);
}

template <class C>
struct ContractionResult {
  IdealHandle<C> handle;  // generators involve only the first keep_vars
  // one membership certificate per contraction generator, against the
  // source handle's original generators
  std::vector<MembershipCert<C>> certs;
};

// Generators of I intersected with the subring in the first keep_vars
// variables. Requires an elimination-compatible order on the handle.
template <class C>
ContractionResult<C> contraction(const IdealHandle<C>& I,
                                 std::size_t keep_vars) {
  if (!(I.order.kind == MonomialOrder::BlockElim &&
        I.order.block_start <= keep_vars))
    throw std::invalid_argument(
        "contraction: handle order does not eliminate down to the subring");
  ContractionResult<C> out;
  std::vector<Polynomial<C>> sub;
  for (std::size_t j = 0; j < I.basis.size(); ++j) {
    if (!involves_only_prefix(I.basis[j], keep_vars)) continue;
    sub.push_back(I.basis[j]);
    MembershipCert<C> c;
    c.target = I.basis[j];
    c.generators = I.generators;
    c.n_primary = I.n_primary;
    c.cofactors = I.transform[j];
    out.certs.push_back(std::move(c));
  }
  out.handle = IdealHandle<C>::complete(I.nvars, I.order, std::move(sub));
  return out;
}

template <class C>
struct NotInRadical {
  Polynomial<C> remainder;  // nonzero normal form of 1 in the extended ring
};

// Rabinowitsch check: adjoin a fresh variable T, decide 1 in <I, 1 - a*T>,
// and on success clear T by substituting powers of a. Independent of the
// extraction pipeline; used as a cross-check oracle.
template <class C>
std::variant<NilpotencyCert<C>, NotInRadical<C>> radical_membership(
    const IdealHandle<C>& I, const Polynomial<C>& a) {
  std::size_t nv = I.nvars;
  if (a.is_zero()) {
    NilpotencyCert<C> zc;
    zc.element = a;
    zc.exponent = 1;
    zc.body.target = Polynomial<C>(nv);
    zc.body.generators = I.generators;
    zc.body.n_primary = I.n_primary;
    zc.body.cofactors.assign(I.generators.size(), Polynomial<C>(nv));
    return zc;
  }
  std::size_t T = nv;  // index of the fresh variable
  std::vector<Polynomial<C>> gens;
  gens.reserve(I.generators.size() + 1);
  for (const auto& g : I.generators) gens.push_back(widen(g, nv + 1));
  Polynomial<C> aw = widen(a, nv + 1);
  Polynomial<C> one = Polynomial<C>::constant(nv + 1, coeff_traits<C>::one());
  gens.push_back(one - aw * Polynomial<C>::variable(nv + 1, T));
  IdealHandle<C> ext = IdealHandle<C>::complete(
      nv + 1, MonomialOrder::degrevlex(), std::move(gens));
  auto res = ext.membership(one);
  if (std::holds_alternative<NormalFormTrace<C>>(res)) {
    auto prem = std::get<NormalFormTrace<C>>(res).remainder;
    // project the evidence back by dropping T (it is only evidence)
    return NotInRadical<C>{std::move(prem)};
  }
  MembershipCert<C> cert = std::get<MembershipCert<C>>(std::move(res));
  long N = 0;
  for (std::size_t i = 0; i + 1 < cert.cofactors.size(); ++i)
    N = std::max(N, cert.cofactors[i].degree_in(T));
  NilpotencyCert<C> out;
  out.element = a;
  out.exponent = static_cast<unsigned long>(N);
  out.body.target = a.pow(out.exponent);
  out.body.generators = I.generators;
  out.body.n_primary = I.n_primary;
  for (std::size_t i = 0; i + 1 < cert.cofactors.size(); ++i) {
    // T^j -> a^{N-j}, then drop T
    auto byT = coefficients_in(cert.cofactors[i], T);
    Polynomial<C> acc(nv);
    for (std::size_t j = 0; j < byT.size(); ++j)
      acc = acc + narrow(byT[j], nv) *
                      a.pow(static_cast<unsigned long>(N) - j);
    out.body.cofactors.push_back(std::move(acc));
  }
  if (auto bad = verify(out))
    throw std::logic_error("radical_membership: built certificate invalid: " +
                           bad->what);
  return out;
}

template <class C>
struct NotUnit {
  Polynomial<C> remainder;  // normal form evidence
};

// Invertibility of u modulo the ctx relations, with an explicit inverse.
template <class C>
std::variant<UnitCert<C>, NotUnit<C>> unit_test(const RingCtx<C>& ctx,
                                                const Polynomial<C>& u) {
  IdealHandle<C> h = complete_in_ctx(ctx, {u});
  Polynomial<C> one =
      Polynomial<C>::constant(ctx.nvars(), coeff_traits<C>::one());
  auto res = h.membership(one);
  if (std::holds_alternative<NormalFormTrace<C>>(res))
    return NotUnit<C>{std::get<NormalFormTrace<C>>(res).remainder};
  MembershipCert<C> cert = std::get<MembershipCert<C>>(std::move(res));
  UnitCert<C> out;
  out.element = u;
  out.inverse = cert.cofactors[0];
  out.body = std::move(cert);
  return out;
}

struct SelfTestReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Replays every transform row and re-reduces every S- (and G-) polynomial.
template <class C>
SelfTestReport groebner_selftest(const IdealHandle<C>& I) {
  SelfTestReport rep;
  for (std::size_t j = 0; j < I.basis.size(); ++j) {
    Polynomial<C> acc(I.nvars);
    for (std::size_t i = 0; i < I.generators.size(); ++i)
      acc = acc + I.transform[j][i] * I.generators[i];
    if (acc != I.basis[j]) {
      rep.ok = false;
      rep.failures.push_back("transform row " + std::to_string(j) +
                             " does not replay");
    }
  }
  for (std::size_t k = 0; k < I.basis.size(); ++k) {
    for (std::size_t n = k + 1; n < I.basis.size(); ++n) {
      const Polynomial<C>&f = I.basis[k], &g = I.basis[n];
      std::size_t lif = f.leading_index(I.order),
                  lig = g.leading_index(I.order);
      const Monomial &mf = f.terms()[lif].m, &mg = g.terms()[lig].m;
      const C &cf = f.terms()[lif].c, &cg = g.terms()[lig].c;
      Monomial L = lcm(mf, mg);
      Monomial df = mf.quotient_of(L), dg = mg.quotient_of(L);
      std::vector<Polynomial<C>> probes;
      if constexpr (coeff_traits<C>::is_field) {
        probes.push_back(f.times_term(df, coeff_traits<C>::inverse(cf)) -
                         g.times_term(dg, coeff_traits<C>::inverse(cg)));
      } else {
        Int cl = lcm(cf, cg);
        probes.push_back(f.times_term(df, Int(cl / cf)) -
                         g.times_term(dg, Int(cl / cg)));
        GcdExt e = gcd_ext(cf, cg);
        probes.push_back(f.times_term(df, e.s) + g.times_term(dg, e.t));
      }
      for (const auto& p : probes) {
        if (!I.normal_form(p).remainder.is_zero()) {
          rep.ok = false;
          rep.failures.push_back("pair (" + std::to_string(k) + "," +
                                 std::to_string(n) + ") does not reduce to 0");
        }
      }
    }
  }
  return rep;
}

enum class TransportDirection { IntoQuotient, FromQuotient };

// Certificate transport across a quotient by I. From-quotient materializes
// the hidden relation cofactors from a normal-form trace; into-quotient
// drops them after reducing the remaining cofactors.
template <class C>
MembershipCert<C> transport(TransportDirection dir,
                            const MembershipCert<C>& cert,
                            const IdealHandle<C>& I) {
  if (dir == TransportDirection::FromQuotient) {
    MembershipCert<C> out = cert;
    Polynomial<C> acc(cert.target.nvars());
    for (std::size_t i = 0; i < cert.generators.size(); ++i)
      acc = acc + cert.cofactors[i] * cert.generators[i];
    Polynomial<C> diff = cert.target - acc;  // must lie in <I>
    auto res = I.membership(diff);
    if (std::holds_alternative<NormalFormTrace<C>>(res))
      throw std::invalid_argument(
          "transport: certificate defect does not lie in the quotient ideal");
    MembershipCert<C> d = std::get<MembershipCert<C>>(std::move(res));
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
      out.generators.push_back(d.generators[i]);
      out.cofactors.push_back(d.cofactors[i]);
    }
    return out;
  }
  // IntoQuotient: drop every generator that is one of I's generators
  MembershipCert<C> out;
  out.target = cert.target;
  for (std::size_t i = 0; i < cert.generators.size(); ++i) {
    bool is_rel = false;
    for (const auto& g : I.generators)
      if (g == cert.generators[i]) {
        is_rel = true;
        break;
      }
    if (!is_rel) {
      out.generators.push_back(cert.generators[i]);
      out.cofactors.push_back(I.normal_form(cert.cofactors[i]).remainder);
    }
  }
  out.n_primary = out.generators.size();
  return out;
}

// Verification inside a quotient: replay, then reduce the defect.
template <class C>
std::optional<VerifyMismatch> verify_in_quotient(const MembershipCert<C>& c,
                                                 const IdealHandle<C>& I) {
  Polynomial<C> acc(c.target.nvars());
  for (std::size_t i = 0; i < c.generators.size(); ++i)
    acc = acc + c.cofactors[i] * c.generators[i];
  if (!I.normal_form(acc - c.target).remainder.is_zero())
    return VerifyMismatch{"combination does not replay modulo the relations"};
  return std::nullopt;
}

}  // namespace jacradix

#endif  // JACRADIX_IDEAL_HPP
