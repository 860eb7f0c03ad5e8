#ifndef JACRADIX_MATRIX_HPP
#define JACRADIX_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "jacradix/certificates.hpp"
#include "jacradix/ideal.hpp"
#include "jacradix/polynomial.hpp"

namespace jacradix {

// Result of pseudo-division by g in one variable: a^l * p == r + q*g with
// deg_var(r) < deg_var(g), all divisions by the leading coefficient a cleared
// into the recorded power.
template <class C>
struct PseudoReduction {
  Polynomial<C> remainder;
  Polynomial<C> quotient;
  unsigned long denominator_power = 0;
};

template <class C>
PseudoReduction<C> pseudo_reduce(const Polynomial<C>& p,
                                 const Polynomial<C>& g, std::size_t var) {
  long n = g.degree_in(var);
  if (n < 0) throw std::invalid_argument("pseudo_reduce: zero divisor poly");
  auto gc = coefficients_in(g, var);
  Polynomial<C> a = gc.back();  // leading coefficient, free of var
  PseudoReduction<C> out;
  out.remainder = p;
  out.quotient = Polynomial<C>(p.nvars());
  while (out.remainder.degree_in(var) >= n) {
    long d = out.remainder.degree_in(var);
    auto rc = coefficients_in(out.remainder, var);
    Polynomial<C> lead = rc[static_cast<std::size_t>(d)];
    Polynomial<C> shift = Polynomial<C>::variable(
        p.nvars(), var, static_cast<unsigned>(d - n));
    out.remainder = a * out.remainder - lead * shift * g;
    out.quotient = a * out.quotient + lead * shift;
    ++out.denominator_power;
  }
  return out;
}

// Multiplication-by-f matrix on the basis 1, X, ..., X^{n-1} modulo a degree-n
// relation g with leading coefficient a:
//   a^l * (f * X^j) == sum_i m[j][i] X^i + gq[j] * g.
template <class C>
struct MulMatrix {
  std::vector<std::vector<Polynomial<C>>> m;
  std::vector<Polynomial<C>> gq;  // cofactors of g per row
  Polynomial<C> localizer;        // a
  std::size_t var = 0;
  std::size_t n = 0;
  unsigned long denominator_power = 0;  // l
};

// Degenerate g (degree 0 in var) yields nothing; the caller takes a
// different branch in that case.
template <class C>
std::optional<MulMatrix<C>> mul_matrix(const Polynomial<C>& f,
                                       const Polynomial<C>& g,
                                       std::size_t var) {
  long n = g.degree_in(var);
  if (n < 1) return std::nullopt;
  auto gc = coefficients_in(g, var);
  MulMatrix<C> out;
  out.localizer = gc.back();
  out.var = var;
  out.n = static_cast<std::size_t>(n);
  std::vector<PseudoReduction<C>> rows;
  for (std::size_t j = 0; j < out.n; ++j) {
    Polynomial<C> xj = Polynomial<C>::variable(f.nvars(), var,
                                               static_cast<unsigned>(j));
    rows.push_back(pseudo_reduce(f * xj, g, var));
    out.denominator_power =
        std::max(out.denominator_power, rows.back().denominator_power);
  }
  for (std::size_t j = 0; j < out.n; ++j) {
    Polynomial<C> scale =
        out.localizer.pow(out.denominator_power - rows[j].denominator_power);
    Polynomial<C> r = rows[j].remainder * scale;
    out.gq.push_back(rows[j].quotient * scale);
    auto rc = coefficients_in(r, var);
    rc.resize(out.n, Polynomial<C>(f.nvars()));
    out.m.push_back(std::move(rc));
  }
  return out;
}

namespace detail {
template <class C>
Polynomial<C> scalar_div_exact(const Polynomial<C>& p, unsigned long k) {
  if constexpr (coeff_traits<C>::is_field) {
    return p.scaled(Rat(1, static_cast<unsigned long>(k)));
  } else {
    std::vector<typename Polynomial<C>::Term> ts;
    for (const auto& t : p.terms()) {
      auto q = divide_exact(Int(k), t.c);
      if (!q)
        throw std::logic_error("char_poly: inexact scalar division");
      ts.push_back({t.m, *q});
    }
    return Polynomial<C>::from_terms(p.nvars(), std::move(ts));
  }
}
}  // namespace detail

// Characteristic polynomial det(T*Id - M) by Faddeev-LeVerrier; the scalar
// divisions are exact over the coefficient ring. Returns c_1..c_n with
// char(T) = T^n + c_1 T^{n-1} + ... + c_n.
template <class C>
std::vector<Polynomial<C>> char_poly(const MulMatrix<C>& M) {
  std::size_t n = M.n;
  std::size_t nv = M.localizer.nvars();
  auto mat_mul = [&](const std::vector<std::vector<Polynomial<C>>>& A,
                     const std::vector<std::vector<Polynomial<C>>>& B) {
    std::vector<std::vector<Polynomial<C>>> R(
        n, std::vector<Polynomial<C>>(n, Polynomial<C>(nv)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          R[i][j] = R[i][j] + A[i][k] * B[k][j];
    return R;
  };
  std::vector<std::vector<Polynomial<C>>> N(
      n, std::vector<Polynomial<C>>(n, Polynomial<C>(nv)));
  for (std::size_t i = 0; i < n; ++i)
    N[i][i] = Polynomial<C>::constant(nv, coeff_traits<C>::one());
  std::vector<Polynomial<C>> cs;
  for (std::size_t k = 1; k <= n; ++k) {
    auto Mk = mat_mul(M.m, N);
    Polynomial<C> tr(nv);
    for (std::size_t i = 0; i < n; ++i) tr = tr + Mk[i][i];
    Polynomial<C> ck = detail::scalar_div_exact(tr, k).negated();
    cs.push_back(ck);
    N = Mk;
    for (std::size_t i = 0; i < n; ++i) N[i][i] = N[i][i] + ck;
  }
  return cs;
}

// Assemble the integral dependence of f over the subring, certified against a
// completed relation handle (which must contain g):
//   a^{l*n} f^n + sum_i (c_{n-i} a^{l*i}) f^i  lies in <relations>.
template <class C>
IntegralityCert<C> integrality_cert(const Polynomial<C>& f,
                                    const MulMatrix<C>& M,
                                    const std::vector<Polynomial<C>>& cs,
                                    const IdealHandle<C>& relations) {
  IntegralityCert<C> out;
  out.element = f;
  out.localizer = M.localizer;
  out.n = M.n;
  out.l = M.denominator_power * M.n;
  Polynomial<C> dep = M.localizer.pow(out.l) * f.pow(out.n);
  for (std::size_t i = 0; i < out.n; ++i) {
    Polynomial<C> ci =
        cs[out.n - 1 - i] * M.localizer.pow(M.denominator_power * i);
    dep = dep + ci * f.pow(i);
    out.coeffs.push_back(std::move(ci));
  }
  auto res = relations.membership(dep);
  if (std::holds_alternative<NormalFormTrace<C>>(res))
    throw std::logic_error(
        "integrality_cert: dependence does not lie in the relation ideal");
  out.body = std::get<MembershipCert<C>>(std::move(res));
  return out;
}

}  // namespace jacradix

#endif  // JACRADIX_MATRIX_HPP
