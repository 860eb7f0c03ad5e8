#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>
#include <variant>

#include "jacradix/ideal.hpp"
#include "jacradix/jacobson.hpp"

using namespace jacradix;

namespace {
using PZ = Polynomial<Int>;
using PQ = Polynomial<Rat>;

PZ zc(std::size_t nv, long c) { return PZ::constant(nv, Int(c)); }
PQ qv(std::size_t nv, std::size_t i, unsigned e = 1) {
  return PQ::variable(nv, i, e);
}
PQ qc(std::size_t nv, long c) { return PQ::constant(nv, Rat(c)); }

// engine-assisted construction of p^k in <gens> for the smallest k <= cap
template <class C>
std::optional<NilpotencyCert<C>> find_nilpotency(
    const IdealHandle<C>& h, const Polynomial<C>& p, unsigned long cap) {
  for (unsigned long k = 0; k <= cap; ++k) {
    auto r = h.membership(p.pow(k));
    if (std::holds_alternative<MembershipCert<C>>(r)) {
      NilpotencyCert<C> c;
      c.element = p;
      c.exponent = k;
      c.body = std::get<MembershipCert<C>>(std::move(r));
      return c;
    }
  }
  return std::nullopt;
}
}  // namespace

TEST_CASE("cut rule: exponent is exactly (m+1)*k and the result replays") {
  std::mt19937 rng(60301);
  std::uniform_int_distribution<long> small(2, 9);
  int done = 0, attempts = 0;
  while (done < 25 && ++attempts < 2000) {
    long t = small(rng), s = small(rng), r1 = small(rng), r2 = small(rng);
    // U = <s*t^2>, x = t*r1, y = t*r2: (xy)^2 and x^m mod <U,y> both exist
    auto U = IdealHandle<Int>::complete(0, MonomialOrder::degrevlex(),
                                        {zc(0, s * t * t)});
    auto U2 = IdealHandle<Int>::complete(
        0, MonomialOrder::degrevlex(), {zc(0, s * t * t), zc(0, t * r2)});
    PZ x = zc(0, t * r1), y = zc(0, t * r2);
    auto c1 = find_nilpotency(U, x * y, 6);
    auto c2 = find_nilpotency(U2, x, 6);
    if (!c1 || !c2) continue;
    auto out = cut_nil(*c1, *c2, x, y);
    CHECK(out.exponent == (c2->exponent + 1) * c1->exponent);
    CHECK(out.element == x);
    CHECK(out.body.generators == c1->body.generators);
    auto bad = verify(out);
    if (bad) FAIL(bad->what);
    ++done;
  }
  CHECK(done == 25);
}

TEST_CASE("cut rule over Q[x]") {
  std::size_t nv = 1;
  PQ x = qv(nv, 0);
  auto U = IdealHandle<Rat>::complete(nv, MonomialOrder::degrevlex(),
                                      {x.pow(4)});
  auto U2 = IdealHandle<Rat>::complete(
      nv, MonomialOrder::degrevlex(), {x.pow(4), x + qc(nv, 1)});
  PQ a = x * (x + qc(nv, 2));
  PQ y = x + qc(nv, 1);
  auto c1 = find_nilpotency(U, a * y, 6);
  auto c2 = find_nilpotency(U2, a, 6);
  REQUIRE(c1);
  REQUIRE(c2);
  auto out = cut_nil(*c1, *c2, a, y);
  CHECK(out.exponent == (c2->exponent + 1) * c1->exponent);
  auto bad = verify(out);
  if (bad) FAIL(bad->what);
}

TEST_CASE("cut rule rejects mismatched generator lists") {
  auto U = IdealHandle<Int>::complete(0, MonomialOrder::degrevlex(),
                                      {zc(0, 8)});
  auto V = IdealHandle<Int>::complete(0, MonomialOrder::degrevlex(),
                                      {zc(0, 9), zc(0, 2)});
  auto c1 = find_nilpotency(U, zc(0, 4), 6);
  auto c2 = find_nilpotency(V, zc(0, 3), 6);
  REQUIRE(c1);
  REQUIRE(c2);
  CHECK_THROWS_AS(cut_nil(*c1, *c2, zc(0, 4), zc(0, 2)),
                  std::invalid_argument);
}

TEST_CASE("nilpotent sums combine with binomial cofactors") {
  std::mt19937 rng(60302);
  std::uniform_int_distribution<long> small(2, 9);
  for (int it = 0; it < 40; ++it) {
    long t = small(rng), r1 = small(rng), r2 = small(rng);
    auto U = IdealHandle<Int>::complete(0, MonomialOrder::degrevlex(),
                                        {zc(0, t * t * t)});
    auto ca = find_nilpotency(U, zc(0, t * r1), 8);
    auto cb = find_nilpotency(U, zc(0, t * r2), 8);
    REQUIRE(ca);
    REQUIRE(cb);
    auto out = nilpotent_sum(*ca, *cb);
    CHECK(out.element == zc(0, t * r1 + t * r2));
    CHECK(out.exponent == ca->exponent + cb->exponent - 1);
    auto bad = verify(out);
    if (bad) FAIL(bad->what);
  }
}

TEST_CASE("nilpotent sum over Q[x] and the unit-ideal shortcut") {
  std::size_t nv = 1;
  PQ x = qv(nv, 0);
  auto U = IdealHandle<Rat>::complete(nv, MonomialOrder::degrevlex(),
                                      {x.pow(3)});
  auto ca = find_nilpotency(U, x * (x + qc(nv, 1)), 6);
  auto cb = find_nilpotency(U, x * x, 6);
  REQUIRE(ca);
  REQUIRE(cb);
  auto out = nilpotent_sum(*ca, *cb);
  auto bad = verify(out);
  if (bad) FAIL(bad->what);

  // an exponent-0 input (1 already in the ideal) short-circuits
  auto W = IdealHandle<Rat>::complete(nv, MonomialOrder::degrevlex(),
                                      {x - qc(nv, 1), x + qc(nv, 1)});
  auto cz = find_nilpotency(W, qc(nv, 5), 0);
  auto cw = find_nilpotency(W, x - qc(nv, 1), 1);
  REQUIRE(cz);
  REQUIRE(cw);
  CHECK(cz->exponent == 0);
  auto shortcut = nilpotent_sum(*cz, *cw);
  CHECK(shortcut.exponent == 0);
  auto badz = verify(shortcut.body);
  if (badz) FAIL(badz->what);
}

TEST_CASE("nil-to-jac answers arbitrary queries") {
  std::mt19937 rng(60303);
  std::uniform_int_distribution<long> small(-9, 9);
  std::size_t nv = 1;
  PQ x = qv(nv, 0);
  auto U = IdealHandle<Rat>::complete(nv, MonomialOrder::degrevlex(),
                                      {x.pow(3)});
  auto c = find_nilpotency(U, x * (x + qc(nv, 2)), 6);
  REQUIRE(c);
  auto orc = nil_to_jac(*c);
  for (int it = 0; it < 30; ++it) {
    PQ b = qc(nv, small(rng)) + qc(nv, small(rng)) * x;
    auto r = orc.query(b);
    REQUIRE(std::holds_alternative<MembershipCert<Rat>>(r));
    auto cert = std::get<MembershipCert<Rat>>(r);
    CHECK(cert.target == qc(nv, 1));
    REQUIRE(cert.generators.size() == c->body.generators.size() + 1);
    CHECK(cert.generators.back() == qc(nv, 1) - c->element * b);
    auto bad = verify(cert);
    if (bad) FAIL(bad->what);
  }
}

TEST_CASE("jac cut composes oracles and merges the adjoined generator") {
  std::mt19937 rng(60304);
  std::uniform_int_distribution<long> small(-5, 5);
  std::size_t nv = 1;
  PQ x = qv(nv, 0);
  std::vector<PQ> U = {x.pow(5)};
  PQ ex = x * (x + qc(nv, 1));
  PQ ey = x * (x - qc(nv, 1));
  MonomialOrder ord = MonomialOrder::degrevlex();
  auto inner = [&](const PQ& z) {
    std::vector<PQ> gens = U;
    gens.push_back(qc(nv, 1) - ey * z);
    return synthesize_oracle<Rat>(nv, ord, gens, ex);
  };
  auto orc = cut_jac<Rat>(inner, ex, ey, U);
  CHECK(orc.element == ex * ey);
  for (int it = 0; it < 15; ++it) {
    PQ w = qc(nv, small(rng)) + qc(nv, small(rng)) * x;
    auto r = orc.query(w);
    REQUIRE(std::holds_alternative<MembershipCert<Rat>>(r));
    auto cert = std::get<MembershipCert<Rat>>(r);
    CHECK(cert.generators.back() == qc(nv, 1) - (ex * ey) * w);
    auto bad = verify(cert);
    if (bad) FAIL(bad->what);
  }
}

TEST_CASE("unit plus nilpotent inverts by geometric series") {
  std::size_t nv = 1;
  PQ x = qv(nv, 0);
  std::vector<PQ> R = {x.pow(3)};
  // u = 2 with inverse 1/2, stated over [u] ++ R
  UnitCert<Rat> u;
  u.element = qc(nv, 2);
  u.inverse = PQ::constant(nv, Rat(1, 2));
  u.body.target = qc(nv, 1);
  u.body.generators = {u.element, R[0]};
  u.body.cofactors = {u.inverse, PQ(nv)};
  u.body.n_primary = 0;
  REQUIRE(!verify(u));

  auto h = IdealHandle<Rat>::complete(nv, MonomialOrder::degrevlex(), R);
  auto m = find_nilpotency(h, x * (x + qc(nv, 1)), 6);
  REQUIRE(m);

  auto out = unit_plus_nilpotent(u, *m);
  CHECK(out.element == u.element + m->element);
  auto bad = verify(out);
  if (bad) FAIL(bad->what);

  // iterate: the result is itself a unit certificate over [u'] ++ R
  auto m2 = find_nilpotency(h, x * x, 6);
  REQUIRE(m2);
  auto out2 = unit_plus_nilpotent(out, *m2);
  auto bad2 = verify(out2);
  if (bad2) FAIL(bad2->what);

  // relation list mismatch is rejected
  auto hh = IdealHandle<Rat>::complete(nv, MonomialOrder::degrevlex(),
                                       {x.pow(4)});
  auto mm = find_nilpotency(hh, x, 6);
  REQUIRE(mm);
  CHECK_THROWS_AS(unit_plus_nilpotent(u, *mm), std::invalid_argument);
}

TEST_CASE("pad and compose keep certificates literal") {
  std::size_t nv = 1;
  PQ x = qv(nv, 0);
  auto h = IdealHandle<Rat>::complete(nv, MonomialOrder::degrevlex(),
                                      {x * x - qc(nv, 1)});
  auto m = h.membership((x * x - qc(nv, 1)) * (x + qc(nv, 4)));
  REQUIRE(std::holds_alternative<MembershipCert<Rat>>(m));
  auto cert = std::get<MembershipCert<Rat>>(m);

  std::vector<PQ> longer = {x + qc(nv, 9), x * x - qc(nv, 1), x.pow(5)};
  auto padded = pad_to(cert, longer, longer.size());
  CHECK(padded.generators == longer);
  auto bad = verify(padded);
  if (bad) FAIL(bad->what);
  CHECK_THROWS_AS(pad_to(cert, {x + qc(nv, 9)}, 1), std::invalid_argument);

  // compose: express the single generator over H = {x-1, x+1} and rewrite
  auto H = IdealHandle<Rat>::complete(
      nv, MonomialOrder::degrevlex(), {x - qc(nv, 1), x + qc(nv, 1)});
  auto g_in_h = H.membership(x * x - qc(nv, 1));
  REQUIRE(std::holds_alternative<MembershipCert<Rat>>(g_in_h));
  auto rewritten = compose_through(
      cert, {std::get<MembershipCert<Rat>>(g_in_h)});
  CHECK(rewritten.target == cert.target);
  auto badc = verify(rewritten);
  if (badc) FAIL(badc->what);
}
