#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdg/algebra.hpp"

// Generators for the ring families the verification harness sweeps:
// chain rings, the length-4 and length-5 local families for each
// attainable Hilbert function and socle dimension, trivial extensions,
// and a non-local product family.

namespace zdg {

enum class Family {
  CHAIN,            // F_p[x]/(x^n)
  LEN4_H13,         // F_p[x,y,z]/((x,y,z)^2)
  LEN4_H121,        // F_p[x,y]/(xy, y^2-x^2)
  LEN5_H131_GOR,    // F_p[x,y,z]/(xy,xz,yz,x^2-y^2,x^2-z^2)
  LEN5_H131_SOC2,   // F_p[x,y,z]/(x^2,xy,xz,yz,y^2-z^2)
  LEN5_H131_SOC3,   // F_p[x,y,z]/(x^2,xy,xz,y^2,yz,z^3)
  LEN5_H122,        // F_p[x,y]/(xy, x^3, y^3)
  LEN5_H1211_SOC1,  // F_p[x,y]/(xy, y^2-x^3, x^4)
  LEN5_H1211_SOC2,  // F_p[x,y]/(xy, y^2, x^4)
  TRIVEXT_LEN6,     // trivial extension of F_p[x,y]/((x,y)^2)
  PRODUCT,          // F_p[x]/(x^2) x F_p[x]/(x^3), non-local length 5
};

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& name);
std::vector<Family> all_families();

struct FamilySpec {
  Family family;
  Prime p;
  std::size_t n = 0;  // CHAIN only
};

struct ExpectedRecord {
  bool is_local = true;
  std::size_t length = 0;
  std::vector<std::size_t> hilbert;
  std::size_t socle_dim = 0;
  bool gorenstein = false;
  std::size_t omega_bound = 0;               // 5 - socle_dim at length 5, 3 at length 4
  std::optional<std::size_t> omega_exact;    // pinned only where proven or oracled
};

struct CatalogRing {
  FamilySpec spec;
  std::string presentation;  // empty for constructions without one
  FiniteAlgebra ring;
  ExpectedRecord expected;
};

/// Compiles the family member and asserts its ExpectedRecord against the
/// computed invariants; a mismatch throws (it means an engine bug).
CatalogRing generate(const FamilySpec& spec);

/// Cartesian family x prime generation.
std::vector<CatalogRing> sweep(const std::vector<u32>& primes,
                               const std::vector<Family>& families);

/// The >= 12 length-5 local rings over {2,3} covering all four Hilbert cases.
std::vector<CatalogRing> length5_corpus();

/// Length-4 local rings over {2,3,5}.
std::vector<CatalogRing> length4_corpus();

/// Presentation text for a family member (empty if construction-based).
std::string family_presentation(const FamilySpec& spec);

}  // namespace zdg
