#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zdg/gf.hpp"

// Finite-dimensional commutative unital algebras over F_p, given by a
// basis and structure constants, together with the local-ring invariant
// suite: maximal ideal, powers of m, Hilbert function, length, socle.

namespace zdg {

class FiniteAlgebra;

/// Element of a FiniteAlgebra, stored by coordinates in the algebra basis.
struct Element {
  std::vector<u32> coords;
};

/// An ideal, represented as the subspace it spans in coordinate space.
/// Closure under multiplication by basis elements is checked on wrap.
struct IdealSub {
  Subspace space;
};

enum class Length5Case { PIR_CHAIN, H131, H122, H1211 };

std::string to_string(Length5Case c);

struct RingInvariants {
  bool is_local = false;
  std::size_t residue_degree = 0;  // [k : F_p], 0 when not local
  std::size_t length = 0;          // over k when local, over F_p otherwise
  std::vector<std::size_t> hilbert;
  std::size_t embdim = 0;
  std::size_t socle_dim = 0;
  bool is_gorenstein = false;
  std::size_t nilpotency_index = 0;  // smallest n with m^n = 0
};

class FiniteAlgebra {
 public:
  /// table[i][j] holds the coordinates of e_i * e_j. Commutativity,
  /// associativity on basis triples and the identity law are all
  /// verified here; violations throw with the offending triple named.
  FiniteAlgebra(Prime p, std::vector<std::string> basis_labels,
                std::vector<std::vector<std::vector<u32>>> table,
                std::vector<u32> one_vec);

  Prime prime() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::vector<std::vector<std::vector<u32>>>& table() const { return table_; }

  std::uint64_t element_count() const;  // p^dim

  Element zero() const;
  Element one() const;
  Element basis_element(std::size_t i) const;
  Element element_from_index(std::uint64_t idx) const;
  std::uint64_t element_index(const Element& a) const;
  std::string format_element(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(u32 c, const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t e) const;

  /// Matrix of the F_p-linear map x -> a x in the algebra basis.
  Matrix mult_matrix(const Element& a) const;

  bool is_zero(const Element& a) const;
  bool is_unit(const Element& a) const;
  IdealSub annihilator(const Element& a) const;

  IdealSub zero_ideal() const;
  IdealSub unit_ideal() const;
  IdealSub ideal_generated(const std::vector<Element>& gens) const;
  IdealSub ideal_product(const IdealSub& lhs, const IdealSub& rhs) const;
  IdealSub ideal_power(const IdealSub& ideal, std::size_t n) const;

  bool is_ideal(const Subspace& s) const;

  struct Locality {
    bool is_local;
    IdealSub max_ideal;           // meaningful only when local
    std::size_t residue_degree;   // meaningful only when local
  };
  const Locality& locality() const;

  /// (0 :_R m). Requires a local algebra; the socle of a field is the
  /// zero ideal.
  IdealSub socle() const;

  const RingInvariants& invariants() const;

 private:
  void check_table() const;
  Locality compute_locality() const;
  RingInvariants compute_invariants() const;

  Prime p_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::vector<u32>>> table_;
  std::vector<u32> one_;
  mutable std::optional<Locality> locality_;
  mutable std::optional<RingInvariants> invariants_;
};

/// Maps a length-5 local Hilbert function to its case tag. Any other
/// total-5 Hilbert sequence is structurally impossible and throws.
Length5Case classify_length5(const RingInvariants& inv);

/// Direct product with componentwise structure constants.
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Splits along nontrivial idempotents until every factor is local.
std::vector<FiniteAlgebra> local_decomposition(const FiniteAlgebra& r);

/// A ⋉ D for D = Hom(A, F_p) with (a,f)(a',f') = (aa', a f' + a' f).
/// Requires A local with residue degree 1.
FiniteAlgebra trivial_extension(const FiniteAlgebra& a);

/// Enumeration bound for element scans; overridable via ZDGLAB_MAX_ELEMS.
std::uint64_t max_enumeration_bound();

}  // namespace zdg
