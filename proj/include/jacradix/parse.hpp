#ifndef JACRADIX_PARSE_HPP
#define JACRADIX_PARSE_HPP

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacradix/jacobson.hpp"
#include "jacradix/numeric.hpp"
#include "jacradix/polynomial.hpp"

namespace jacradix {

// Syntax error with the byte offset of the offending character.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " at byte " + std::to_string(off)),
        offset(off) {}
};

// Ring descriptor in surface form: ground ring, variable blocks, and the
// raw quotient generator strings (parsed later, once the variables are
// known).
struct RingSyntax {
  GroundRing ground;
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  std::string source;
};

namespace parsing {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool take(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!take(c)) throw ParseError(std::string("expected ") + what, i);
  }
};

inline std::string read_ident(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  if (c.i >= c.s.size() ||
      !(std::isalpha(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
    throw ParseError("expected an identifier", c.i);
  while (c.i < c.s.size() &&
         (std::isalnum(static_cast<unsigned char>(c.s[c.i])) ||
          c.s[c.i] == '_'))
    ++c.i;
  return c.s.substr(start, c.i - start);
}

inline Int read_nat(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    ++c.i;
  if (c.i == start) throw ParseError("expected a number", c.i);
  return Int(c.s.substr(start, c.i - start));
}

}  // namespace parsing

// Grammar: `Z` | `Q` | `Z/n`, then zero or more `[v1,...,vk]` blocks,
// then an optional quotient `/<g1,...,gm>`.
inline RingSyntax parse_ring(const std::string& s) {
  parsing::Cursor c{s};
  RingSyntax out;
  out.source = s;
  std::string g = parsing::read_ident(c);
  if (g == "Z") {
    out.ground.kind = GroundRing::Z;
  } else if (g == "Q") {
    out.ground.kind = GroundRing::Q;
  } else {
    throw ParseError("unsupported ground ring '" + g + "'", 0);
  }
  if (g == "Z" && c.peek() == '/') {
    std::size_t slash = c.i;
    ++c.i;
    if (c.peek() != '<') {  // Z/n modulus, not a quotient
      out.ground.kind = GroundRing::Zmod;
      out.ground.modulus = parsing::read_nat(c);
      if (out.ground.modulus <= 1)
        throw ParseError("modulus must be at least 2", slash + 1);
    } else {
      c.i = slash;  // quotient of Z itself, handled below
    }
  }
  while (c.peek() == '[') {
    c.take('[');
    while (true) {
      std::string v = parsing::read_ident(c);
      if (v == "Z" || v == "Q")
        throw ParseError("'" + v + "' cannot be a variable name", c.i);
      for (const auto& w : out.vars)
        if (w == v) throw ParseError("duplicate variable '" + v + "'", c.i);
      out.vars.push_back(v);
      if (c.take(',')) continue;
      c.expect(']', "']' or ','");
      break;
    }
  }
  if (c.take('/')) {
    c.expect('<', "'<' after '/'");
    std::size_t depth = 0;
    std::string cur;
    while (true) {
      if (c.i >= s.size()) throw ParseError("unterminated quotient", c.i);
      char ch = s[c.i];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && (ch == ',' || ch == '>')) {
        out.relations.push_back(cur);
        cur.clear();
        ++c.i;
        if (ch == '>') break;
      } else {
        cur.push_back(ch);
        ++c.i;
      }
    }
  }
  if (!c.eof()) throw ParseError("trailing input after ring descriptor", c.i);
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial expressions: identifiers, ^, *, +, -, parentheses, and numeric
// literals `p` (or `p/q` over Q).
// ---------------------------------------------------------------------------

namespace parsing {

template <class C>
struct PolyParser {
  Cursor c;
  const std::vector<std::string>& vars;
  std::size_t nv;

  Polynomial<C> parse() {
    Polynomial<C> p = expr();
    if (!c.eof()) throw ParseError("trailing input in polynomial", c.i);
    return p;
  }

  Polynomial<C> expr() {
    Polynomial<C> acc =
        c.take('-') ? term().negated() : (c.take('+'), term());
    while (true) {
      if (c.take('+'))
        acc = acc + term();
      else if (c.take('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial<C> term() {
    Polynomial<C> acc = factor();
    while (c.take('*')) acc = acc * factor();
    return acc;
  }

  Polynomial<C> factor() {
    Polynomial<C> base = primary();
    if (c.take('^')) {
      std::size_t at = c.i;
      Int e = read_nat(c);
      if (e < 0 || e > 100000) throw ParseError("exponent out of range", at);
      return base.pow(e.get_ui());
    }
    return base;
  }

  Polynomial<C> primary() {
    char ch = c.peek();
    if (ch == '(') {
      c.take('(');
      Polynomial<C> p = expr();
      c.expect(')', "')'");
      return p;
    }
    if (ch == '-') {  // unary minus inside a product
      c.take('-');
      return factor().negated();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return literal();
    std::size_t at = c.i;
    std::string id = read_ident(c);
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (vars[v] == id) return Polynomial<C>::variable(nv, v);
    throw ParseError("unknown variable '" + id + "'", at);
  }

  Polynomial<C> literal() {
    Int num = read_nat(c);
    // a '/' directly after a literal is a rational, where supported
    if (c.peek() == '/') {
      std::size_t at = c.i;
      if constexpr (coeff_traits<C>::is_field) {
        ++c.i;
        Int den = read_nat(c);
        if (den == 0) throw ParseError("zero denominator", at + 1);
        Rat q(num, den);
        q.canonicalize();
        return Polynomial<C>::constant(nv, q);
      } else {
        throw ParseError("rational literal in an integer ring", at);
      }
    }
    return Polynomial<C>::constant(nv, C(num));
  }
};

}  // namespace parsing

template <class C>
Polynomial<C> parse_poly(const std::string& s,
                         const std::vector<std::string>& vars) {
  parsing::PolyParser<C> p{parsing::Cursor{s}, vars, vars.size()};
  return p.parse();
}

// Deterministic printer; parse(print(p)) == p.
template <class C>
std::string print_poly(const Polynomial<C>& p,
                       const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    C coeff = t.c;
    bool neg = coeff < C(0);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) coeff = -coeff;
    std::string mono;
    for (std::size_t v = 0; v < t.m.e.size(); ++v) {
      if (t.m.e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[v];
      if (t.m.e[v] > 1) mono += "^" + std::to_string(t.m.e[v]);
    }
    if (mono.empty()) {
      os << coeff;
    } else if (coeff == C(1)) {
      os << mono;
    } else {
      os << coeff << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

// Typed ring context from the surface syntax, with the pipeline's
// elimination order.
template <class C>
RingCtx<C> build_ctx(const RingSyntax& rs) {
  if constexpr (coeff_traits<C>::is_field) {
    if (rs.ground.kind != GroundRing::Q)
      throw std::invalid_argument("ring/coefficient type mismatch");
  } else {
    if (rs.ground.kind == GroundRing::Q)
      throw std::invalid_argument("ring/coefficient type mismatch");
  }
  std::vector<Polynomial<C>> rels;
  std::optional<Int> mod;
  if constexpr (!coeff_traits<C>::is_field) {
    if (rs.ground.kind == GroundRing::Zmod) {
      mod = rs.ground.modulus;
      rels.push_back(
          Polynomial<C>::constant(rs.vars.size(), C(rs.ground.modulus)));
    }
  }
  for (const auto& r : rs.relations) rels.push_back(parse_poly<C>(r, rs.vars));
  return make_ctx<C>(rs.vars, MonomialOrder::block_elim(0), std::move(rels),
                     mod);
}

}  // namespace jacradix

#endif  // JACRADIX_PARSE_HPP
