#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Exact linear algebra over prime fields F_p, p <= 97.
// Everything here is immutable after construction and safe to share
// across threads.

namespace zdg {

using u32 = std::uint32_t;

/// A validated prime modulus in [2, 97].
struct Prime {
  u32 p;

  explicit Prime(u32 value);

  friend bool operator==(const Prime&, const Prime&) = default;
};

// Modular scalar helpers. Residues are plain u32 values in [0, p).
inline u32 gf_add(u32 a, u32 b, u32 p) { return (a + b) % p; }
inline u32 gf_sub(u32 a, u32 b, u32 p) { return (a + p - b % p) % p; }
inline u32 gf_mul(u32 a, u32 b, u32 p) { return (a * b) % p; }
u32 gf_neg(u32 a, u32 p);
u32 gf_inv(u32 a, u32 p);  // throws on a == 0
u32 gf_pow(u32 a, u32 e, u32 p);
bool gf_is_square(u32 a, u32 p);

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix(Prime p, std::size_t rows, std::size_t cols);
  Matrix(Prime p, std::size_t rows, std::size_t cols, std::vector<u32> entries);

  static Matrix identity(Prime p, std::size_t n);

  u32 at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, u32 v) { entries_[r * cols_ + c] = v % p_.p; }

  Prime prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<u32>& data() const { return entries_; }

  Matrix transpose() const;
  Matrix mul(const Matrix& rhs) const;
  std::vector<u32> apply(const std::vector<u32>& v) const;  // this * column v

  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Prime p_;
  std::size_t rows_, cols_;
  std::vector<u32> entries_;
};

/// Reduced row echelon form and rank. Deterministic; rref(rref(m)) == rref(m).
std::pair<Matrix, std::size_t> rref(const Matrix& m);

std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);  // throws if singular

/// A subspace of F_p^n, stored canonically: basis rows in RREF with
/// strictly increasing pivot columns. Equal subspaces compare equal
/// byte-for-byte, which canonical_key exposes.
class Subspace {
 public:
  /// Zero subspace of the given ambient dimension.
  Subspace(Prime p, std::size_t ambient_dim);

  /// Row space of the given matrix (rows live in F_p^cols).
  static Subspace row_space(const Matrix& m);
  static Subspace span(Prime p, std::size_t ambient_dim,
                       const std::vector<std::vector<u32>>& vectors);
  static Subspace full(Prime p, std::size_t ambient_dim);

  Prime prime() const { return basis_.prime(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<u32> basis_vector(std::size_t i) const;

  bool contains(const std::vector<u32>& v) const;
  bool contains(const Subspace& other) const;

  /// Byte string equal for two subspaces iff they are equal as sets.
  std::string canonical_key() const;

  /// All ambient-space vectors lying in the subspace (p^dim of them).
  std::vector<std::vector<u32>> enumerate() const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(Matrix rref_basis);
  Matrix basis_;  // RREF, zero rows dropped
};

/// Null space {v : m v = 0} as a canonical subspace of F_p^cols.
Subspace kernel(const Matrix& m);

/// Enumerate all vectors of F_p^n in coordinate-lexicographic order,
/// last coordinate varying fastest.
std::vector<u32> index_to_vector(std::uint64_t index, std::size_t n, u32 p);
std::uint64_t vector_to_index(const std::vector<u32>& v, u32 p);

}  // namespace zdg
