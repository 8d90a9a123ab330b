#include "zdg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zdg {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line(line),
      column(column) {}

std::size_t Monomial::degree() const {
  std::size_t d = 0;
  for (u32 e : exponents) d += e;
  return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += b.exponents[i];
  return out;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exponents.size(); ++i)
    if (a.exponents[i] > b.exponents[i]) return false;
  return true;
}

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
  Monomial out = b;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] -= a.exponents[i];
  return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i)
    out.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
  return out;
}

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  std::size_t da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  // Equal degree: a > b iff the last nonzero entry of a - b is negative.
  for (std::size_t i = a.exponents.size(); i-- > 0;) {
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i];
  }
  return false;
}

const Monomial& Poly::leading_monomial() const {
  if (terms.empty()) throw std::domain_error("leading_monomial of zero polynomial");
  return terms.begin()->first;
}

u32 Poly::leading_coefficient() const {
  if (terms.empty()) throw std::domain_error("leading_coefficient of zero polynomial");
  return terms.begin()->second;
}

Poly poly_zero() { return Poly{}; }

Poly poly_term(const Monomial& m, u32 c, u32 p) {
  Poly f;
  if (c % p != 0) f.terms[m] = c % p;
  return f;
}

Poly poly_add(const Poly& a, const Poly& b, u32 p) {
  Poly out = a;
  for (const auto& [m, c] : b.terms) {
    auto it = out.terms.find(m);
    if (it == out.terms.end()) {
      out.terms[m] = c;
    } else {
      it->second = gf_add(it->second, c, p);
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

Poly poly_scale(u32 c, const Poly& a, u32 p) {
  Poly out;
  c %= p;
  if (c == 0) return out;
  for (const auto& [m, cc] : a.terms) out.terms[m] = gf_mul(c, cc, p);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b, u32 p) {
  return poly_add(a, poly_scale(p - 1, b, p), p);
}

Poly poly_mul(const Poly& a, const Poly& b, u32 p) {
  Poly out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Monomial m = mono_mul(ma, mb);
      u32 c = gf_mul(ca, cb, p);
      auto it = out.terms.find(m);
      if (it == out.terms.end()) {
        if (c != 0) out.terms[m] = c;
      } else {
        it->second = gf_add(it->second, c, p);
        if (it->second == 0) out.terms.erase(it);
      }
    }
  return out;
}

Poly poly_monic(const Poly& a, u32 p) {
  if (a.is_zero()) return a;
  return poly_scale(gf_inv(a.leading_coefficient(), p), a, p);
}

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0, line = 1, col = 1;

  explicit Lexer(const std::string& t) : text(t) { skip_ws(); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      if (text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }

  char advance() {
    char c = text[pos++];
    ++col;
    return c;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

  void expect(char c) {
    skip_ws();
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool accept(char c) {
    skip_ws();
    if (!eof() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  u32 integer() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::uint64_t v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(advance() - '0');
      if (v > 1'000'000) fail("integer literal too large");
    }
    return static_cast<u32>(v);
  }

  std::string identifier() {
    skip_ws();
    if (eof() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected identifier");
    std::string s;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      s.push_back(advance());
    return s;
  }

  bool next_is_digit() {
    skip_ws();
    return !eof() && std::isdigit(static_cast<unsigned char>(peek()));
  }

  bool next_is_ident() {
    skip_ws();
    return !eof() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_');
  }
};

struct PolyParser {
  Lexer& lx;
  const std::vector<std::string>& vars;
  u32 p;

  std::size_t var_index(const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) lx.fail("unknown identifier '" + name + "'");
    return static_cast<std::size_t>(it - vars.begin());
  }

  // term := integer ('*' power)* | power ('*' power)*
  Poly term() {
    u32 coef = 1;
    Monomial m{std::vector<u32>(vars.size(), 0)};
    bool have_factor = false;
    if (lx.next_is_digit()) {
      coef = lx.integer() % p;
      have_factor = true;
      if (!lx.accept('*')) return poly_term(m, coef, p);
    } else if (!lx.next_is_ident()) {
      lx.fail("expected term");
    }
    while (true) {
      std::string name = lx.identifier();
      std::size_t vi = var_index(name);
      u32 e = 1;
      if (lx.accept('^')) e = lx.integer();
      m.exponents[vi] += e;
      have_factor = true;
      if (!lx.accept('*')) break;
    }
    (void)have_factor;
    return poly_term(m, coef, p);
  }

  Poly poly() {
    bool neg = false;
    if (lx.accept('-'))
      neg = true;
    else
      lx.accept('+');
    Poly f = neg ? poly_scale(p - 1, term(), p) : term();
    while (true) {
      lx.skip_ws();
      char c = lx.peek();
      if (c == '+') {
        lx.advance();
        f = poly_add(f, term(), p);
      } else if (c == '-') {
        lx.advance();
        f = poly_sub(f, term(), p);
      } else {
        break;
      }
    }
    return f;
  }
};

}  // namespace

PresentationAST parse(const std::string& text) {
  Lexer lx(text);
  std::string kw = lx.identifier();
  if (kw != "GF") lx.fail("expected 'GF'");
  lx.expect('(');
  u32 pval = lx.integer();
  lx.expect(')');
  Prime p = [&] {
    try {
      return Prime(pval);
    } catch (const std::invalid_argument&) {
      lx.fail(std::to_string(pval) + " is not a prime in [2, 97]");
    }
  }();
  lx.expect('[');
  std::vector<std::string> vars;
  do {
    std::string v = lx.identifier();
    if (std::find(vars.begin(), vars.end(), v) != vars.end())
      lx.fail("duplicate variable '" + v + "'");
    vars.push_back(v);
  } while (lx.accept(','));
  lx.expect(']');
  lx.expect('/');
  lx.expect('(');
  if (lx.accept(')'))
    lx.fail("infinite quotient: empty relation list with " + std::to_string(vars.size()) +
            " variable(s)");
  std::vector<Poly> relations;
  PolyParser pp{lx, vars, p.p};
  do {
    relations.push_back(pp.poly());
  } while (lx.accept(','));
  lx.expect(')');
  lx.skip_ws();
  if (!lx.eof()) lx.fail("trailing input after presentation");
  return PresentationAST{p, std::move(vars), std::move(relations)};
}

std::string poly_to_string(const Poly& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.terms) {
    if (!first) out << " + ";
    first = false;
    bool constant = m.degree() == 0;
    if (c != 1 || constant) {
      out << c;
      if (!constant) out << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << vars[i];
      if (m.exponents[i] > 1) out << "^" << m.exponents[i];
    }
  }
  return out.str();
}

std::string pretty_print(const PresentationAST& ast) {
  std::ostringstream out;
  out << "GF(" << ast.p.p << ")[";
  for (std::size_t i = 0; i < ast.vars.size(); ++i) {
    if (i) out << ",";
    out << ast.vars[i];
  }
  out << "]/(";
  for (std::size_t i = 0; i < ast.relations.size(); ++i) {
    if (i) out << ", ";
    out << poly_to_string(ast.relations[i], ast.vars);
  }
  out << ")";
  return out.str();
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  const u32 p = gb.p.p;
  Poly work = f, result = poly_zero();
  while (!work.is_zero()) {
    const Monomial lt = work.leading_monomial();
    const u32 lc = work.leading_coefficient();
    bool reduced = false;
    for (const Poly& g : gb.polys) {
      if (!mono_divides(g.leading_monomial(), lt)) continue;
      u32 factor = gf_mul(lc, gf_inv(g.leading_coefficient(), p), p);
      Poly mult = poly_mul(poly_term(mono_quotient(lt, g.leading_monomial()), factor, p), g, p);
      work = poly_sub(work, mult, p);
      reduced = true;
      break;
    }
    if (!reduced) {
      result = poly_add(result, poly_term(lt, lc, p), p);
      work.terms.erase(work.terms.begin());
    }
  }
  return result;
}

GroebnerBasis buchberger(const PresentationAST& ast) {
  const u32 p = ast.p.p;
  GroebnerBasis gb{ast.p, ast.vars, {}};
  for (const Poly& f : ast.relations)
    if (!f.is_zero()) gb.polys.push_back(poly_monic(f, p));
  if (gb.polys.empty())
    throw std::invalid_argument("buchberger: all relations are zero (infinite quotient)");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto add_pairs = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, n);
  };
  for (std::size_t j = 1; j < gb.polys.size(); ++j) add_pairs(j);

  while (!pairs.empty()) {
    // Normal strategy: pick the pair with the degrevlex-smallest lcm.
    std::size_t best = 0;
    Monomial best_lcm = mono_lcm(gb.polys[pairs[0].first].leading_monomial(),
                                 gb.polys[pairs[0].second].leading_monomial());
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      Monomial l = mono_lcm(gb.polys[pairs[k].first].leading_monomial(),
                            gb.polys[pairs[k].second].leading_monomial());
      if (degrevlex_greater(best_lcm, l)) {
        best = k;
        best_lcm = l;
      }
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    const Monomial& lti = gb.polys[i].leading_monomial();
    const Monomial& ltj = gb.polys[j].leading_monomial();
    // Buchberger's first criterion: coprime leading terms reduce to zero.
    if (mono_lcm(lti, ltj) == mono_mul(lti, ltj)) continue;
    Monomial l = mono_lcm(lti, ltj);
    Poly spoly = poly_sub(poly_mul(poly_term(mono_quotient(l, lti), 1, p), gb.polys[i], p),
                          poly_mul(poly_term(mono_quotient(l, ltj), 1, p), gb.polys[j], p), p);
    Poly rem = normal_form(spoly, gb);
    if (!rem.is_zero()) {
      gb.polys.push_back(poly_monic(rem, p));
      add_pairs(gb.polys.size() - 1);
    }
  }

  // Inter-reduce to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gb.polys.size(); ++i) {
      GroebnerBasis others{gb.p, gb.vars, {}};
      for (std::size_t j = 0; j < gb.polys.size(); ++j)
        if (j != i) others.polys.push_back(gb.polys[j]);
      Poly red = normal_form(gb.polys[i], others);
      if (red.is_zero()) {
        gb.polys.erase(gb.polys.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      red = poly_monic(red, p);
      if (!(red.terms == gb.polys[i].terms)) {
        gb.polys[i] = red;
        changed = true;
      }
    }
  }
  std::sort(gb.polys.begin(), gb.polys.end(), [](const Poly& a, const Poly& b) {
    return degrevlex_greater(b.leading_monomial(), a.leading_monomial());
  });
  return gb;
}

bool is_finite_quotient(const GroebnerBasis& gb) {
  const std::size_t n = gb.vars.size();
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const Poly& g : gb.polys) {
      const Monomial& lt = g.leading_monomial();
      bool pure = lt.exponents[v] > 0;
      for (std::size_t w = 0; w < n && pure; ++w)
        if (w != v && lt.exponents[w] > 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

FiniteAlgebra to_algebra(const GroebnerBasis& gb) {
  if (!is_finite_quotient(gb))
    throw std::domain_error("to_algebra: quotient is infinite-dimensional");
  const std::size_t n = gb.vars.size();
  const u32 p = gb.p.p;
  // Box bound from the pure-power leading terms.
  std::vector<u32> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (const Poly& g : gb.polys) {
      const Monomial& lt = g.leading_monomial();
      bool pure = lt.exponents[v] > 0;
      for (std::size_t w = 0; w < n && pure; ++w)
        if (w != v && lt.exponents[w] > 0) pure = false;
      if (pure && (bound[v] == 0 || lt.exponents[v] < bound[v])) bound[v] = lt.exponents[v];
    }
  std::vector<Monomial> leading;
  for (const Poly& g : gb.polys) leading.push_back(g.leading_monomial());
  auto is_standard = [&](const Monomial& m) {
    for (const Monomial& lt : leading)
      if (mono_divides(lt, m)) return false;
    return true;
  };
  std::vector<Monomial> basis;
  Monomial cur{std::vector<u32>(n, 0)};
  // Enumerate the bounding box.
  std::uint64_t total = 1;
  for (std::size_t v = 0; v < n; ++v) {
    total *= bound[v];
    if (total > (1ull << 22))
      throw std::domain_error("to_algebra: quotient dimension exceeds 4096");
  }
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t v = n; v-- > 0;) {
      cur.exponents[v] = static_cast<u32>(t % bound[v]);
      t /= bound[v];
    }
    if (is_standard(cur)) basis.push_back(cur);
  }
  if (basis.size() > 4096)
    throw std::domain_error("to_algebra: quotient dimension exceeds 4096");
  std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
    return degrevlex_greater(b, a);
  });
  const std::size_t d = basis.size();
  auto find_basis = [&](const Monomial& m) {
    auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end())
      throw std::logic_error("to_algebra: normal form produced a non-standard monomial");
    return static_cast<std::size_t>(it - basis.begin());
  };
  std::vector<std::vector<std::vector<u32>>> table(
      d, std::vector<std::vector<u32>>(d, std::vector<u32>(d, 0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Poly prod = poly_term(mono_mul(basis[i], basis[j]), 1, p);
      Poly nf = normal_form(prod, gb);
      std::vector<u32> coords(d, 0);
      for (const auto& [m, c] : nf.terms) coords[find_basis(m)] = c;
      table[i][j] = coords;
      table[j][i] = std::move(coords);
    }
  std::vector<std::string> labels;
  for (const Monomial& m : basis) {
    Poly t = poly_term(m, 1, p);
    labels.push_back(poly_to_string(t, gb.vars));
  }
  std::vector<u32> one(d, 0);
  one[0] = 1;  // degrevlex-first basis monomial is 1
  return FiniteAlgebra(gb.p, std::move(labels), std::move(table), std::move(one));
}

FiniteAlgebra compile_presentation(const std::string& text) {
  return to_algebra(buchberger(parse(text)));
}

}  // namespace zdg
