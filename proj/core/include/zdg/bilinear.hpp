#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdg/algebra.hpp"
#include "zdg/gf.hpp"

// Symmetric bilinear spaces over F_p and the construction of the form
// on m/m^2 for local rings with m^2 principal and m^3 = 0, together
// with its socle/radical and Gorenstein/nondegeneracy checks.

namespace zdg {

class BilinearSpace {
 public:
  explicit BilinearSpace(Matrix gram);  // must be square and symmetric

  Prime prime() const { return gram_.prime(); }
  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }

  u32 eval(const std::vector<u32>& u, const std::vector<u32>& v) const;
  Subspace radical() const;
  bool is_nondegenerate() const;

 private:
  Matrix gram_;
};

/// Orthogonal basis (diagonal Gram) for p != 2; throws UnsupportedCharacteristic
/// on p = 2.
struct UnsupportedCharacteristic : std::domain_error {
  UnsupportedCharacteristic()
      : std::domain_error("orthogonal_basis requires characteristic != 2") {}
};

std::vector<std::vector<u32>> orthogonal_basis(const BilinearSpace& v);

struct RadicalSplit {
  Subspace radical;
  std::vector<std::vector<u32>> complement_basis;  // vectors in the ambient space
  BilinearSpace complement_space;                  // restricted form, nondegenerate
};

RadicalSplit split_radical(const BilinearSpace& v);

/// {a_1 v, ..., a_m v} for distinct nonzero scalars; requires v isotropic,
/// nonzero, and m <= p - 1.
std::vector<std::vector<u32>> isotropic_family(const BilinearSpace& space,
                                               const std::vector<u32>& v, std::size_t m);

struct OrthogonalSearchResult {
  std::vector<std::vector<std::vector<u32>>> witnesses;
  std::uint64_t candidates_checked = 0;
  bool budget_exceeded = false;
};

/// Exhaustive search for size-`size` sets of nonzero, pairwise orthogonal
/// vectors, optionally with no two parallel. Vectors are normalized to
/// pivot-1 form for deduplication; output order is canonical.
OrthogonalSearchResult search_orthogonal_sets(const BilinearSpace& space, std::size_t size,
                                              bool pairwise_nonparallel,
                                              std::uint64_t budget = 1'000'000'000ull,
                                              std::size_t max_witnesses = 64);

enum class PhiError { NOT_LOCAL, RESIDUE_DEG, M2_NOT_PRINCIPAL, M3_NONZERO };

std::string to_string(PhiError e);

struct PhiConstructionError : std::domain_error {
  PhiConstructionError(PhiError code, const std::string& detail)
      : std::domain_error("build_phi: " + to_string(code) + ": " + detail), code(code) {}
  PhiError code;
};

/// The form on V = m/m^2 with phi(a-bar, b-bar) = u where ab = u*l for the
/// canonical generator l of m^2. Orthogonality in V matches vanishing
/// products in R.
class PhiConstruction {
 public:
  static PhiConstruction build(const FiniteAlgebra& ring);

  const BilinearSpace& space() const { return space_; }
  const FiniteAlgebra& ring() const { return *ring_; }
  const Element& generator() const { return l_; }
  const std::vector<Element>& coset_basis() const { return coset_basis_; }
  const Subspace& m() const { return m_; }
  const Subspace& m2() const { return m2_; }

  /// Coordinates of a-bar in the coset basis of m/m^2. Requires a in m.
  std::vector<u32> project(const Element& a) const;

  struct CheckReport {
    bool orthogonality_pass = true;   // phi(a,b) = 0  <=>  ab = 0 over m x m
    bool socle_dim_pass = true;       // socle_dim = dim radical + 1
    bool gorenstein_pass = true;      // Gorenstein <=> nondegenerate
    std::string counterexample;
    bool all_pass() const {
      return orthogonality_pass && socle_dim_pass && gorenstein_pass;
    }
  };

  /// Exhaustive verification against the ring (all of m x m).
  CheckReport socle_radical_check() const;

 private:
  PhiConstruction(const FiniteAlgebra& ring, BilinearSpace space, Element l,
                  std::vector<Element> coset_basis, Subspace m, Subspace m2,
                  Matrix projector);

  const FiniteAlgebra* ring_;
  BilinearSpace space_;
  Element l_;
  std::vector<Element> coset_basis_;
  Subspace m_, m2_;
  Matrix projector_;  // dim(V) x dim(R): coords in R -> coords of the coset
};

/// All symmetric invertible Grams of the given dimension (p in {2,3} scale),
/// used by exhaustive Lemma-style checks.
std::vector<Matrix> all_nondegenerate_symmetric_grams(Prime p, std::size_t dim);

/// Congruence representatives of nondegenerate symmetric forms in odd
/// characteristic: diag(1,...,1) and diag(1,...,1,n) for a nonsquare n.
std::vector<Matrix> congruence_representative_grams(Prime p, std::size_t dim);

}  // namespace zdg
