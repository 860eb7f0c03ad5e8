#ifndef JACRADIX_CERT_JSON_HPP
#define JACRADIX_CERT_JSON_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "jacradix/certificates.hpp"
#include "jacradix/parse.hpp"

namespace jacradix {

// Fixed key order: kind, ring, element, exponent, generators, cofactors,
// sub_certs. Integers travel as decimal strings.
using CertJson = nlohmann::ordered_json;

namespace jsoning {

template <class C>
CertJson polys(const std::vector<Polynomial<C>>& ps,
               const std::vector<std::string>& vars) {
  CertJson a = CertJson::array();
  for (const auto& p : ps) a.push_back(print_poly(p, vars));
  return a;
}

template <class C>
std::vector<Polynomial<C>> unpolys(const CertJson& a,
                                   const std::vector<std::string>& vars) {
  std::vector<Polynomial<C>> out;
  for (const auto& s : a) out.push_back(parse_poly<C>(s.get<std::string>(), vars));
  return out;
}

}  // namespace jsoning

template <class C>
CertJson to_json(const MembershipCert<C>& c, const std::string& ring,
                 const std::vector<std::string>& vars) {
  CertJson j;
  j["kind"] = "membership";
  j["ring"] = ring;
  j["element"] = print_poly(c.target, vars);
  j["exponent"] = "1";
  j["generators"] = jsoning::polys(c.generators, vars);
  j["cofactors"] = jsoning::polys(c.cofactors, vars);
  j["sub_certs"] = CertJson::array();
  return j;
}

template <class C>
CertJson to_json(const NilpotencyCert<C>& c, const std::string& ring,
                 const std::vector<std::string>& vars) {
  CertJson j;
  j["kind"] = "nilpotency";
  j["ring"] = ring;
  j["element"] = print_poly(c.element, vars);
  j["exponent"] = std::to_string(c.exponent);
  j["generators"] = jsoning::polys(c.body.generators, vars);
  j["cofactors"] = jsoning::polys(c.body.cofactors, vars);
  j["sub_certs"] = CertJson::array();
  return j;
}

template <class C>
CertJson to_json(const KdimCert<C>& c, const std::string& ring,
                 const std::vector<std::string>& vars) {
  CertJson j;
  j["kind"] = "kdim";
  j["ring"] = ring;
  std::string elems, exps;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (i) elems += ", ", exps += ", ";
    elems += print_poly(c.elements[i], vars);
    exps += std::to_string(c.exponents[i]);
  }
  j["element"] = elems;
  j["exponent"] = exps;
  j["generators"] = jsoning::polys(c.body.generators, vars);
  j["cofactors"] = jsoning::polys(c.body.cofactors, vars);
  CertJson sub;
  sub["kind"] = "membership";
  sub["ring"] = ring;
  sub["element"] = print_poly(c.body.target, vars);
  sub["exponent"] = "1";
  sub["generators"] = jsoning::polys(c.body.generators, vars);
  sub["cofactors"] = jsoning::polys(c.body.cofactors, vars);
  sub["sub_certs"] = CertJson::array();
  j["sub_certs"] = CertJson::array({sub});
  return j;
}

// Replay a serialized certificate: recompute the target and check the
// combination against it. Pure arithmetic; no engine involved.
template <class C>
std::optional<VerifyMismatch> verify_json(const CertJson& j,
                                          const std::vector<std::string>& vars) {
  std::string kind = j.at("kind").get<std::string>();
  auto gens = jsoning::unpolys<C>(j.at("generators"), vars);
  auto cofs = jsoning::unpolys<C>(j.at("cofactors"), vars);
  if (kind == "nilpotency") {
    NilpotencyCert<C> c;
    c.element = parse_poly<C>(j.at("element").get<std::string>(), vars);
    c.exponent = std::stoul(j.at("exponent").get<std::string>());
    c.body.target = c.element.pow(c.exponent);
    c.body.generators = std::move(gens);
    c.body.cofactors = std::move(cofs);
    c.body.n_primary = c.body.generators.size();
    return verify(c);
  }
  if (kind == "membership" || kind == "kdim") {
    // kdim serializes its staircase combination as the first sub-cert; the
    // top-level entry replays the same body, so a membership replay covers
    // both.
    MembershipCert<C> c;
    c.generators = std::move(gens);
    c.cofactors = std::move(cofs);
    c.n_primary = c.generators.size();
    if (kind == "membership") {
      c.target = parse_poly<C>(j.at("element").get<std::string>(), vars);
    } else {
      c.target = parse_poly<C>(
          j.at("sub_certs").at(0).at("element").get<std::string>(), vars);
    }
    return verify(c);
  }
  return VerifyMismatch{"unknown certificate kind '" + kind + "'"};
}

}  // namespace jacradix

#endif  // JACRADIX_CERT_JSON_HPP
