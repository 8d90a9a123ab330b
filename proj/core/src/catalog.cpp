#include "zdg/catalog.hpp"

#include <sstream>

#include "zdg/presentation.hpp"

namespace zdg {

std::string to_string(Family f) {
  switch (f) {
    case Family::CHAIN: return "CHAIN";
    case Family::LEN4_H13: return "LEN4_H13";
    case Family::LEN4_H121: return "LEN4_H121";
    case Family::LEN5_H131_GOR: return "LEN5_H131_GOR";
    case Family::LEN5_H131_SOC2: return "LEN5_H131_SOC2";
    case Family::LEN5_H131_SOC3: return "LEN5_H131_SOC3";
    case Family::LEN5_H122: return "LEN5_H122";
    case Family::LEN5_H1211_SOC1: return "LEN5_H1211_SOC1";
    case Family::LEN5_H1211_SOC2: return "LEN5_H1211_SOC2";
    case Family::TRIVEXT_LEN6: return "TRIVEXT_LEN6";
    case Family::PRODUCT: return "PRODUCT";
  }
  return "?";
}

std::vector<Family> all_families() {
  return {Family::CHAIN,          Family::LEN4_H13,       Family::LEN4_H121,
          Family::LEN5_H131_GOR,  Family::LEN5_H131_SOC2, Family::LEN5_H131_SOC3,
          Family::LEN5_H122,      Family::LEN5_H1211_SOC1, Family::LEN5_H1211_SOC2,
          Family::TRIVEXT_LEN6,   Family::PRODUCT};
}

std::optional<Family> family_from_string(const std::string& name) {
  for (Family f : all_families())
    if (to_string(f) == name) return f;
  return std::nullopt;
}

std::string family_presentation(const FamilySpec& spec) {
  std::ostringstream out;
  const u32 p = spec.p.p;
  switch (spec.family) {
    case Family::CHAIN:
      out << "GF(" << p << ")[x]/(x^" << spec.n << ")";
      break;
    case Family::LEN4_H13:
      out << "GF(" << p << ")[x,y,z]/(x^2, x*y, x*z, y^2, y*z, z^2)";
      break;
    case Family::LEN4_H121:
      out << "GF(" << p << ")[x,y]/(x*y, y^2 - x^2)";
      break;
    case Family::LEN5_H131_GOR:
      out << "GF(" << p << ")[x,y,z]/(x*y, x*z, y*z, x^2 - y^2, x^2 - z^2)";
      break;
    case Family::LEN5_H131_SOC2:
      out << "GF(" << p << ")[x,y,z]/(x^2, x*y, x*z, y*z, y^2 - z^2)";
      break;
    case Family::LEN5_H131_SOC3:
      out << "GF(" << p << ")[x,y,z]/(x^2, x*y, x*z, y^2, y*z, z^3)";
      break;
    case Family::LEN5_H122:
      out << "GF(" << p << ")[x,y]/(x*y, x^3, y^3)";
      break;
    case Family::LEN5_H1211_SOC1:
      out << "GF(" << p << ")[x,y]/(x*y, y^2 - x^3, x^4)";
      break;
    case Family::LEN5_H1211_SOC2:
      out << "GF(" << p << ")[x,y]/(x*y, y^2, x^4)";
      break;
    case Family::TRIVEXT_LEN6:
    case Family::PRODUCT:
      return "";  // built by construction, not from a presentation
  }
  return out.str();
}

namespace {

ExpectedRecord expected_for(const FamilySpec& spec) {
  ExpectedRecord e;
  const u32 p = spec.p.p;
  switch (spec.family) {
    case Family::CHAIN: {
      const std::size_t n = spec.n;
      e.length = n;
      e.hilbert.assign(n, 1);
      e.socle_dim = n >= 2 ? 1 : 0;
      e.gorenstein = n >= 2;
      // Vertices i = 1..n-1, [x^i]-[x^j] adjacent iff i+j >= n.
      e.omega_exact = n >= 2 ? n - n / 2 : 0;  // n - ceil((n-1)/2); field is empty

      e.omega_bound = n == 5 ? 4 : (n == 4 ? 3 : *e.omega_exact);
      break;
    }
    case Family::LEN4_H13:
      e.length = 4;
      e.hilbert = {1, 3};
      e.socle_dim = 3;
      e.omega_bound = 3;
      e.omega_exact = 1;  // a single vertex
      break;
    case Family::LEN4_H121:
      e.length = 4;
      e.hilbert = {1, 2, 1};
      e.socle_dim = 1;
      e.gorenstein = true;
      e.omega_bound = 3;
      break;
    case Family::LEN5_H131_GOR:
      e.length = 5;
      e.hilbert = {1, 3, 1};
      e.socle_dim = 1;
      e.gorenstein = true;
      e.omega_bound = 4;
      if (p != 2) e.omega_exact = 4;
      break;
    case Family::LEN5_H131_SOC2:
      e.length = 5;
      e.hilbert = {1, 3, 1};
      e.socle_dim = 2;
      e.omega_bound = 3;
      if (p != 2) e.omega_exact = 3;
      break;
    case Family::LEN5_H131_SOC3:
      e.length = 5;
      e.hilbert = {1, 3, 1};
      e.socle_dim = 3;
      e.omega_bound = 2;
      e.omega_exact = 2;
      break;
    case Family::LEN5_H122:
      e.length = 5;
      e.hilbert = {1, 2, 2};
      e.socle_dim = 2;
      e.omega_bound = 3;
      e.omega_exact = 3;  // witness {[x],[y],[x^2]}, bound from above
      break;
    case Family::LEN5_H1211_SOC1:
      e.length = 5;
      e.hilbert = {1, 2, 1, 1};
      e.socle_dim = 1;
      e.gorenstein = true;
      e.omega_bound = 4;
      break;
    case Family::LEN5_H1211_SOC2:
      e.length = 5;
      e.hilbert = {1, 2, 1, 1};
      e.socle_dim = 2;
      e.omega_bound = 3;
      break;
    case Family::TRIVEXT_LEN6:
      e.length = 6;
      e.hilbert = {1, 4, 1};
      e.socle_dim = 1;
      e.gorenstein = true;
      e.omega_bound = 0;  // no length-5 bound applies; growth checked separately
      break;
    case Family::PRODUCT:
      e.is_local = false;
      e.length = 5;  // over F_p
      e.omega_bound = 0;
      break;
  }
  return e;
}

FiniteAlgebra build_ring(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::TRIVEXT_LEN6: {
      FiniteAlgebra base = compile_presentation(
          "GF(" + std::to_string(spec.p.p) + ")[x,y]/(x^2, x*y, y^2)");
      return trivial_extension(base);
    }
    case Family::PRODUCT: {
      FiniteAlgebra a = compile_presentation("GF(" + std::to_string(spec.p.p) + ")[x]/(x^2)");
      FiniteAlgebra b = compile_presentation("GF(" + std::to_string(spec.p.p) + ")[x]/(x^3)");
      return product(a, b);
    }
    default:
      return compile_presentation(family_presentation(spec));
  }
}

}  // namespace

CatalogRing generate(const FamilySpec& spec) {
  if (spec.family == Family::CHAIN && spec.n < 1)
    throw std::invalid_argument("generate: CHAIN requires n >= 1");
  FiniteAlgebra ring = build_ring(spec);
  ExpectedRecord exp = expected_for(spec);
  const RingInvariants& inv = ring.invariants();
  auto fail = [&](const std::string& what) {
    throw std::logic_error("generate(" + to_string(spec.family) + ", p=" +
                           std::to_string(spec.p.p) + "): expectation mismatch: " + what);
  };
  if (inv.is_local != exp.is_local) fail("locality");
  if (inv.length != exp.length) fail("length");
  if (exp.is_local) {
    if (inv.hilbert != exp.hilbert) fail("hilbert function");
    if (inv.socle_dim != exp.socle_dim) fail("socle dimension");
    if (inv.is_gorenstein != exp.gorenstein) fail("gorenstein flag");
  }
  return CatalogRing{spec, family_presentation(spec), std::move(ring), std::move(exp)};
}

std::vector<CatalogRing> sweep(const std::vector<u32>& primes,
                               const std::vector<Family>& families) {
  std::vector<CatalogRing> out;
  for (u32 p : primes)
    for (Family f : families) {
      FamilySpec spec{f, Prime(p), f == Family::CHAIN ? std::size_t{5} : std::size_t{0}};
      out.push_back(generate(spec));
    }
  return out;
}

std::vector<CatalogRing> length5_corpus() {
  return sweep({2, 3},
               {Family::CHAIN, Family::LEN5_H131_GOR, Family::LEN5_H131_SOC2,
                Family::LEN5_H131_SOC3, Family::LEN5_H122, Family::LEN5_H1211_SOC1,
                Family::LEN5_H1211_SOC2});
}

std::vector<CatalogRing> length4_corpus() {
  std::vector<CatalogRing> out;
  for (u32 p : {2u, 3u, 5u}) {
    out.push_back(generate(FamilySpec{Family::CHAIN, Prime(p), 4}));
    out.push_back(generate(FamilySpec{Family::LEN4_H13, Prime(p), 0}));
    out.push_back(generate(FamilySpec{Family::LEN4_H121, Prime(p), 0}));
  }
  return out;
}

}  // namespace zdg
