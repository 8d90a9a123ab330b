#pragma once

#include <map>
#include <string>
#include <vector>

#include "zdg/algebra.hpp"
#include "zdg/gf.hpp"

// Parsing of ring presentations `GF(p)[x,...]/(f1,...,fm)` and their
// compilation to structure-constant algebras through a reduced Groebner
// basis (degrevlex, Buchberger with the coprime-leading-term criterion)
// and the standard-monomial basis of the quotient.

namespace zdg {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line, column;
};

/// Exponent vector; length equals the number of declared variables.
struct Monomial {
  std::vector<u32> exponents;

  std::size_t degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);   // a | b
Monomial mono_quotient(const Monomial& b, const Monomial& a);
Monomial mono_lcm(const Monomial& a, const Monomial& b);

/// Degrevlex, greater-than comparison used for leading terms.
bool degrevlex_greater(const Monomial& a, const Monomial& b);

/// Total order functor for term maps: greatest term first.
struct DegrevlexFirst {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return degrevlex_greater(a, b);
  }
};

/// Polynomial over F_p; zero coefficients are never stored.
struct Poly {
  std::map<Monomial, u32, DegrevlexFirst> terms;

  bool is_zero() const { return terms.empty(); }
  const Monomial& leading_monomial() const;
  u32 leading_coefficient() const;
};

Poly poly_zero();
Poly poly_term(const Monomial& m, u32 c, u32 p);
Poly poly_add(const Poly& a, const Poly& b, u32 p);
Poly poly_sub(const Poly& a, const Poly& b, u32 p);
Poly poly_scale(u32 c, const Poly& a, u32 p);
Poly poly_mul(const Poly& a, const Poly& b, u32 p);
Poly poly_monic(const Poly& a, u32 p);

struct PresentationAST {
  Prime p;
  std::vector<std::string> vars;
  std::vector<Poly> relations;
};

/// Parses `GF(p)[x,y]/(x*y, x^3, y^3)`. Whitespace-insensitive; implicit
/// multiplication is rejected. Coefficients are reduced mod p.
PresentationAST parse(const std::string& text);

std::string pretty_print(const PresentationAST& ast);
std::string poly_to_string(const Poly& f, const std::vector<std::string>& vars);

struct GroebnerBasis {
  Prime p;
  std::vector<std::string> vars;
  std::vector<Poly> polys;  // reduced, monic, sorted by leading monomial
};

/// Remainder of f modulo the basis (full multivariate division).
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

/// Reduced Groebner basis under degrevlex; deterministic.
GroebnerBasis buchberger(const PresentationAST& ast);

/// True iff every variable has a pure power among the leading terms.
bool is_finite_quotient(const GroebnerBasis& gb);

/// Quotient algebra on the standard-monomial basis (degrevlex-sorted,
/// 1 first). Throws on infinite quotients and above 4096 dimensions.
FiniteAlgebra to_algebra(const GroebnerBasis& gb);

FiniteAlgebra compile_presentation(const std::string& text);

}  // namespace zdg
