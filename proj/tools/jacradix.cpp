// jacradix: radical/Jacobson-radical membership with explicit certificates.
//
// Subcommands: member, radical, jac, extract, kdim, verify, and the
// brute-force cross-check oracles (brute radical-z / squarefree /
// bounded-search). Exit codes: 0 positive/verified, 1 negative with witness,
// 2 input error, 3 guardrail abort.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jacradix/cert_json.hpp"
#include "jacradix/jacobson.hpp"
#include "jacradix/parse.hpp"

using namespace jacradix;

namespace {

struct QueryArgs {
  std::string ring;
  std::vector<std::string> ideal;
  std::string elem;
  std::string b;  // jac only
  std::vector<std::string> elems;  // kdim only
  std::string cert_out;
  bool trace = false;
};

void add_common(CLI::App* cmd, QueryArgs& q, bool with_ideal = true) {
  cmd->add_option("--ring", q.ring, "ring descriptor, e.g. Z[x] or Q[x,y]/<x^2>")
      ->required();
  if (with_ideal)
    cmd->add_option("--ideal", q.ideal, "ideal generators (repeatable)");
  cmd->add_option("--cert", q.cert_out, "write the certificate as JSON");
}

template <class C>
void write_cert(const QueryArgs& q, const CertJson& j) {
  if (q.cert_out.empty()) return;
  std::ofstream out(q.cert_out);
  out << j.dump(2) << "\n";
}

// user generators in quotient position, relation fold appended
template <class C>
std::vector<Polynomial<C>> parse_gens(const QueryArgs& q,
                                      const RingCtx<C>& ctx) {
  std::vector<Polynomial<C>> gens;
  for (const auto& s : q.ideal) gens.push_back(parse_poly<C>(s, ctx.vars));
  return gens;
}

template <class C>
int run_member(const QueryArgs& q, const RingSyntax& rs) {
  RingCtx<C> ctx = build_ctx<C>(rs);
  IdealHandle<C> I = complete_in_ctx(ctx, parse_gens(q, ctx));
  Polynomial<C> f = parse_poly<C>(q.elem, ctx.vars);
  auto res = I.membership(f);
  if (std::holds_alternative<MembershipCert<C>>(res)) {
    auto& c = std::get<MembershipCert<C>>(res);
    std::cout << "member: yes\n";
    write_cert<C>(q, to_json(c, q.ring, ctx.vars));
    return 0;
  }
  std::cout << "member: no, normal form "
            << print_poly(std::get<NormalFormTrace<C>>(res).remainder,
                          ctx.vars)
            << "\n";
  return 1;
}

template <class C>
int run_radical(const QueryArgs& q, const RingSyntax& rs) {
  RingCtx<C> ctx = build_ctx<C>(rs);
  IdealHandle<C> I = complete_in_ctx(ctx, parse_gens(q, ctx));
  Polynomial<C> f = parse_poly<C>(q.elem, ctx.vars);
  auto res = radical_membership(I, f);
  if (std::holds_alternative<NilpotencyCert<C>>(res)) {
    auto& c = std::get<NilpotencyCert<C>>(res);
    std::cout << "member: yes, exponent " << c.exponent << "\n";
    write_cert<C>(q, to_json(c, q.ring, ctx.vars));
    return 0;
  }
  std::vector<std::string> evars = ctx.vars;
  evars.push_back("_T");
  std::cout << "member: no, witness remainder "
            << print_poly(std::get<NotInRadical<C>>(res).remainder, evars)
            << " (in the extended ring)\n";
  return 1;
}

template <class C>
int run_jac(const QueryArgs& q, const RingSyntax& rs) {
  RingCtx<C> ctx = build_ctx<C>(rs);
  std::vector<Polynomial<C>> gens = parse_gens(q, ctx);
  for (const auto& r : ctx.relations) gens.push_back(r);
  Polynomial<C> f = parse_poly<C>(q.elem, ctx.vars);
  Polynomial<C> b = parse_poly<C>(q.b, ctx.vars);
  JacOracle<C> orc = synthesize_oracle<C>(ctx.nvars(), ctx.order, gens, f);
  OracleResult<C> res = orc.query(b);
  if (std::holds_alternative<MembershipCert<C>>(res)) {
    auto& c = std::get<MembershipCert<C>>(res);
    std::cout << "query ok: 1 in <I, 1 - a*b>\n";
    write_cert<C>(q, to_json(c, q.ring, ctx.vars));
    return 0;
  }
  auto& ref = std::get<Refutation<C>>(res);
  std::cout << "not in Jac: witness b = " << print_poly(ref.b, ctx.vars)
            << ", normal form of 1 is "
            << print_poly(ref.remainder, ctx.vars) << "\n";
  return 1;
}

template <class C>
int run_extract(const QueryArgs& q, const RingSyntax& rs) {
  RingCtx<C> ctx = build_ctx<C>(rs);
  std::vector<Polynomial<C>> gens = parse_gens(q, ctx);
  // quotient relations join the generator list; the Zmod fold is re-added by
  // the pipeline itself
  for (const auto& r : ctx.relations)
    if (!(ctx.declared_modulus &&
          r == Polynomial<C>::constant(ctx.nvars(), C(*ctx.declared_modulus))))
      gens.push_back(r);
  Polynomial<C> f = parse_poly<C>(q.elem, ctx.vars);
  std::function<void(const Polynomial<C>&, bool)> tracer = nullptr;
  if (q.trace)
    tracer = [&ctx](const Polynomial<C>& b, bool ok) {
      std::cout << "  oracle query b = " << print_poly(b, ctx.vars) << " -> "
                << (ok ? "1 in <I, 1-a*b>" : "refuted") << "\n";
    };
  ExtractResult<C> res =
      iterated_extract<C>(rs.ground, ctx.nvars(), gens, f, tracer);
  if (std::holds_alternative<NilpotencyCert<C>>(res)) {
    auto& c = std::get<NilpotencyCert<C>>(res);
    std::cout << "member: yes, exponent " << c.exponent << "\n";
    write_cert<C>(q, to_json(c, q.ring, ctx.vars));
    return 0;
  }
  auto& ref = std::get<Refutation<C>>(res);
  std::cout << "member: no, witness b = " << print_poly(ref.b, ctx.vars)
            << ", normal form of 1 is "
            << print_poly(ref.remainder, ctx.vars) << "\n";
  return 1;
}

template <class C>
int run_kdim(const QueryArgs& q, const RingSyntax& rs) {
  RingCtx<C> ctx = build_ctx<C>(rs);
  if constexpr (!coeff_traits<C>::is_field) {
    if (rs.ground.kind == GroundRing::Zmod && q.elems.size() == 1) {
      Int x = parse_poly<C>(q.elems[0], ctx.vars).constant_value();
      KdimCert<Int> c = kdim0_witness_zmod(rs.ground.modulus, x, ctx.nvars());
      std::cout << "kdim 0 staircase: exponent " << c.exponents[0] << "\n";
      write_cert<C>(q, to_json(c, q.ring, ctx.vars));
      return 0;
    }
    if (rs.ground.kind == GroundRing::Z && q.elems.size() == 2) {
      Int x0 = parse_poly<C>(q.elems[0], ctx.vars).constant_value();
      Int x1 = parse_poly<C>(q.elems[1], ctx.vars).constant_value();
      KdimCert<Int> c = kdim1_witness_z(x0, x1, ctx.nvars());
      std::cout << "kdim 1 staircase: exponents " << c.exponents[0] << ", "
                << c.exponents[1] << "\n";
      write_cert<C>(q, to_json(c, q.ring, ctx.vars));
      return 0;
    }
  }
  std::cerr << "kdim: supported queries are Z/n with one element and Z with "
               "two elements\n";
  return 2;
}

int run_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 2;
  }
  CertJson j = CertJson::parse(in);
  RingSyntax rs = parse_ring(j.at("ring").get<std::string>());
  std::optional<VerifyMismatch> bad;
  if (rs.ground.kind == GroundRing::Q)
    bad = verify_json<Rat>(j, rs.vars);
  else
    bad = verify_json<Int>(j, rs.vars);
  if (bad) {
    std::cout << "Mismatch: " << bad->what << "\n";
    return 1;
  }
  std::cout << "Ok\n";
  return 0;
}

// --- brute-force cross-check oracles --------------------------------------

Int radical_z(const Int& n) {
  // product of the distinct prime divisors, by trial division
  Int m = abs(n), rad = 1;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      rad *= p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) rad *= m;
  return rad;
}

Polynomial<Rat> derivative(const Polynomial<Rat>& p, std::size_t var) {
  Polynomial<Rat> out(p.nvars());
  for (const auto& t : p.terms()) {
    if (t.m.e[var] == 0) continue;
    Monomial m = t.m;
    unsigned e = m.e[var];
    m.e[var] = e - 1;
    out = out + Polynomial<Rat>::term(m, t.c * e);
  }
  return out;
}

int run_squarefree(const std::string& poly) {
  std::vector<std::string> vars = {"x"};
  Polynomial<Rat> p = parse_poly<Rat>(poly, vars);
  if (p.is_zero()) {
    std::cout << "0\n";
    return 0;
  }
  Polynomial<Rat> dp = derivative(p, 0);
  // gcd(p, p') is the single basis element of <p, p'> over Q[x]
  IdealHandle<Rat> h = IdealHandle<Rat>::complete(
      1, MonomialOrder::degrevlex(), {p, dp});
  Polynomial<Rat> g = h.basis.empty()
                          ? Polynomial<Rat>::constant(1, Rat(1))
                          : h.basis[0];
  // squarefree part: p / gcd(p, p'), via one reduction step
  IdealHandle<Rat> hg =
      IdealHandle<Rat>::complete(1, MonomialOrder::degrevlex(), {g});
  auto nf = hg.normal_form(p);
  if (!nf.remainder.is_zero()) {
    std::cerr << "internal: gcd does not divide p\n";
    return 2;
  }
  std::cout << print_poly(nf.quotients[0], vars) << "\n";
  return 0;
}

template <class C>
int run_bounded_search(const QueryArgs& q, const RingSyntax& rs,
                       unsigned long bound) {
  RingCtx<C> ctx = build_ctx<C>(rs);
  IdealHandle<C> I = complete_in_ctx(ctx, parse_gens(q, ctx));
  Polynomial<C> f = parse_poly<C>(q.elem, ctx.vars);
  for (unsigned long n = 0; n <= bound; ++n) {
    if (I.contains(f.pow(n))) {
      std::cout << "n=" << n << "\n";
      return 0;
    }
  }
  std::cout << "bound exceeded (no exponent up to " << bound << ")\n";
  return 1;
}

template <class F>
int dispatch(const QueryArgs& q, F&& f) {
  RingSyntax rs = parse_ring(q.ring);
  if (rs.ground.kind == GroundRing::Q)
    return f.template operator()<Rat>(q, rs);
  return f.template operator()<Int>(q, rs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radical membership with explicit certificates"};
  app.require_subcommand(1);

  QueryArgs qm, qr, qj, qe, qk, qbs;
  std::string verify_path, squarefree_poly;
  std::string brute_radical_n;
  unsigned long bs_bound = 64;

  auto* member = app.add_subcommand("member", "ideal membership");
  add_common(member, qm);
  member->add_option("--elem", qm.elem)->required();

  auto* radical = app.add_subcommand("radical",
                                     "radical membership (Rabinowitsch)");
  add_common(radical, qr);
  radical->add_option("--elem", qr.elem)->required();

  auto* jac = app.add_subcommand("jac", "single Jacobson-radical query");
  add_common(jac, qj);
  jac->add_option("--elem", qj.elem)->required();
  jac->add_option("--b", qj.b, "query element b")->required();

  auto* extract = app.add_subcommand(
      "extract", "nilpotency extraction through the Jacobson pipeline");
  add_common(extract, qe);
  extract->add_option("--elem", qe.elem)->required();
  extract->add_flag("--trace", qe.trace, "print every oracle query");
  unsigned long max_exp = 1ul << 16;
  extract->add_option("--max-exponent", max_exp, "guardrail ceiling");

  auto* kdim = app.add_subcommand("kdim", "Krull-dimension staircase witness");
  add_common(kdim, qk, /*with_ideal=*/false);
  kdim->add_option("--elem", qk.elems, "staircase elements (repeatable)")
      ->required();

  auto* verify_cmd = app.add_subcommand("verify", "replay a certificate file");
  verify_cmd->add_option("file", verify_path)->required();

  auto* brute = app.add_subcommand("brute", "brute-force cross-check oracles");
  auto* bz = brute->add_subcommand("radical-z", "radical of an integer");
  bz->add_option("n", brute_radical_n)->required();
  auto* sf = brute->add_subcommand("squarefree",
                                   "squarefree part of a Q[x] polynomial");
  sf->add_option("poly", squarefree_poly)->required();
  auto* bs = brute->add_subcommand("bounded-search",
                                   "smallest n with f^n in J, bounded");
  add_common(bs, qbs);
  bs->add_option("--elem", qbs.elem)->required();
  bs->add_option("--bound", bs_bound);
  brute->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*member)
      return dispatch(qm, []<class C>(const QueryArgs& q, const RingSyntax& r) {
        return run_member<C>(q, r);
      });
    if (*radical)
      return dispatch(qr, []<class C>(const QueryArgs& q, const RingSyntax& r) {
        return run_radical<C>(q, r);
      });
    if (*jac)
      return dispatch(qj, []<class C>(const QueryArgs& q, const RingSyntax& r) {
        return run_jac<C>(q, r);
      });
    if (*extract) {
      max_exponent_limit() = max_exp;
      return dispatch(qe, []<class C>(const QueryArgs& q, const RingSyntax& r) {
        return run_extract<C>(q, r);
      });
    }
    if (*kdim)
      return dispatch(qk, []<class C>(const QueryArgs& q, const RingSyntax& r) {
        return run_kdim<C>(q, r);
      });
    if (*verify_cmd) return run_verify(verify_path);
    if (*bz) {
      std::cout << radical_z(Int(brute_radical_n)) << "\n";
      return 0;
    }
    if (*sf) return run_squarefree(squarefree_poly);
    if (*bs)
      return dispatch(qbs,
                      [&]<class C>(const QueryArgs& q, const RingSyntax& r) {
                        return run_bounded_search<C>(q, r, bs_bound);
                      });
  } catch (const GuardrailExceeded& e) {
    std::cerr << "guardrail: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
