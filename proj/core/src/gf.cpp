#include "zdg/gf.hpp"

#include <algorithm>

namespace zdg {

namespace {

bool is_prime_u32(u32 n) {
  if (n < 2) return false;
  for (u32 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Prime::Prime(u32 value) : p(value) {
  if (value < 2 || value > 97 || !is_prime_u32(value))
    throw std::invalid_argument("Prime: modulus must be a prime in [2, 97], got " +
                                std::to_string(value));
}

u32 gf_neg(u32 a, u32 p) { return (p - a % p) % p; }

u32 gf_pow(u32 a, u32 e, u32 p) {
  u32 r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = gf_mul(r, b, p);
    b = gf_mul(b, b, p);
    e >>= 1;
  }
  return r;
}

u32 gf_inv(u32 a, u32 p) {
  a %= p;
  if (a == 0) throw std::domain_error("gf_inv: zero has no inverse");
  return gf_pow(a, p - 2, p);  // Fermat; p is prime
}

bool gf_is_square(u32 a, u32 p) {
  a %= p;
  if (a == 0 || p == 2) return true;
  return gf_pow(a, (p - 1) / 2, p) == 1;
}

Matrix::Matrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(Prime p, std::size_t rows, std::size_t cols, std::vector<u32> entries)
    : p_(p), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw std::invalid_argument("Matrix: entry count does not match shape");
  for (auto& e : entries_) e %= p.p;
}

Matrix Matrix::identity(Prime p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

Matrix Matrix::mul(const Matrix& rhs) const {
  if (cols_ != rhs.rows_ || !(p_ == rhs.p_))
    throw std::invalid_argument("Matrix::mul: shape or modulus mismatch");
  Matrix out(p_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      u32 a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        out.set(r, c, gf_add(out.at(r, c), gf_mul(a, rhs.at(k, c), p_.p), p_.p));
    }
  return out;
}

std::vector<u32> Matrix::apply(const std::vector<u32>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
  std::vector<u32> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    u32 acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      acc = gf_add(acc, gf_mul(at(r, c), v[c] % p_.p, p_.p), p_.p);
    out[r] = acc;
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](u32 e) { return e == 0; });
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
  Matrix a = m;
  const u32 p = a.prime().p;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        u32 t = a.at(sel, c);
        a.set(sel, c, a.at(pivot_row, c));
        a.set(pivot_row, c, t);
      }
    u32 inv = gf_inv(a.at(pivot_row, col), p);
    for (std::size_t c = 0; c < a.cols(); ++c)
      a.set(pivot_row, c, gf_mul(a.at(pivot_row, c), inv, p));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row) continue;
      u32 f = a.at(r, col);
      if (f == 0) continue;
      for (std::size_t c = 0; c < a.cols(); ++c)
        a.set(r, c, gf_sub(a.at(r, c), gf_mul(f, a.at(pivot_row, c), p), p));
    }
    ++pivot_row;
  }
  return {a, pivot_row};
}

std::size_t rank(const Matrix& m) { return rref(m).second; }

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows();
  Matrix aug(m.prime(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, n + r, 1);
  }
  auto [red, rk] = rref(aug);
  // The augmented block always has rank n; invertibility shows up as the
  // left block reducing to the identity.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (red.at(r, c) != (r == c ? 1u : 0u))
        throw std::domain_error("inverse: matrix is singular");
  (void)rk;
  Matrix out(m.prime(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, red.at(r, n + c));
  return out;
}

Subspace::Subspace(Prime p, std::size_t ambient_dim) : basis_(p, 0, ambient_dim) {}

Subspace::Subspace(Matrix rref_basis) : basis_(std::move(rref_basis)) {}

Subspace Subspace::row_space(const Matrix& m) {
  auto [red, rk] = rref(m);
  Matrix basis(m.prime(), rk, m.cols());
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) basis.set(r, c, red.at(r, c));
  return Subspace(std::move(basis));
}

Subspace Subspace::span(Prime p, std::size_t ambient_dim,
                        const std::vector<std::vector<u32>>& vectors) {
  Matrix m(p, vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim)
      throw std::invalid_argument("Subspace::span: vector length mismatch");
    for (std::size_t c = 0; c < ambient_dim; ++c) m.set(r, c, vectors[r][c]);
  }
  return row_space(m);
}

Subspace Subspace::full(Prime p, std::size_t ambient_dim) {
  return row_space(Matrix::identity(p, ambient_dim));
}

std::vector<u32> Subspace::basis_vector(std::size_t i) const {
  std::vector<u32> v(ambient_dim());
  for (std::size_t c = 0; c < ambient_dim(); ++c) v[c] = basis_.at(i, c);
  return v;
}

bool Subspace::contains(const std::vector<u32>& v) const {
  if (v.size() != ambient_dim())
    throw std::invalid_argument("Subspace::contains: ambient dimension mismatch");
  // Reduce v against the RREF basis.
  const u32 p = prime().p;
  std::vector<u32> w(v);
  for (auto& e : w) e %= p;
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t piv = 0;
    while (piv < ambient_dim() && basis_.at(r, piv) == 0) ++piv;
    if (piv == ambient_dim()) continue;
    u32 f = w[piv];
    if (f == 0) continue;
    for (std::size_t c = 0; c < ambient_dim(); ++c)
      w[c] = gf_sub(w[c], gf_mul(f, basis_.at(r, c), p), p);
  }
  return std::all_of(w.begin(), w.end(), [](u32 e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

std::string Subspace::canonical_key() const {
  std::string key;
  key.reserve(8 + basis_.data().size());
  key.push_back(static_cast<char>(prime().p));
  key.push_back(static_cast<char>(ambient_dim()));
  key.push_back(static_cast<char>(dim()));
  for (u32 e : basis_.data()) key.push_back(static_cast<char>(e));
  return key;
}

std::vector<std::vector<u32>> Subspace::enumerate() const {
  const u32 p = prime().p;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim(); ++i) count *= p;
  std::vector<std::vector<u32>> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<u32> coeffs = index_to_vector(idx, dim(), p);
    std::vector<u32> v(ambient_dim(), 0);
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t c = 0; c < ambient_dim(); ++c)
        v[c] = gf_add(v[c], gf_mul(coeffs[r], basis_.at(r, c), p), p);
    out.push_back(std::move(v));
  }
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || !(a.prime() == b.prime()))
    throw std::invalid_argument("sum: ambient mismatch");
  Matrix stacked(a.prime(), a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.ambient_dim(); ++c) stacked.set(r, c, a.basis_.at(r, c));
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < b.ambient_dim(); ++c)
      stacked.set(a.dim() + r, c, b.basis_.at(r, c));
  return Subspace::row_space(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || !(a.prime() == b.prime()))
    throw std::invalid_argument("intersect: ambient mismatch");
  // Zassenhaus: rref of [A | A; B | 0]; rows with zero left block carry
  // an intersection basis in the right block.
  const std::size_t n = a.ambient_dim();
  Matrix z(a.prime(), a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      z.set(r, c, a.basis_.at(r, c));
      z.set(r, n + c, a.basis_.at(r, c));
    }
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) z.set(a.dim() + r, c, b.basis_.at(r, c));
  auto [red, rk] = rref(z);
  std::vector<std::vector<u32>> vecs;
  for (std::size_t r = 0; r < rk; ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c)
      if (red.at(r, c) != 0) left_zero = false;
    if (!left_zero) continue;
    std::vector<u32> v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = red.at(r, n + c);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(a.prime(), n, vecs);
}

Subspace kernel(const Matrix& m) {
  auto [red, rk] = rref(m);
  const std::size_t n = m.cols();
  const u32 p = m.prime().p;
  // Locate pivot columns.
  std::vector<std::size_t> pivot_col(rk);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < rk; ++r) {
    std::size_t c = 0;
    while (c < n && red.at(r, c) == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  std::vector<std::vector<u32>> vecs;
  for (std::size_t free_c = 0; free_c < n; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<u32> v(n, 0);
    v[free_c] = 1;
    for (std::size_t r = 0; r < rk; ++r)
      v[pivot_col[r]] = gf_neg(red.at(r, free_c), p);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.prime(), n, vecs);
}

std::vector<u32> index_to_vector(std::uint64_t index, std::size_t n, u32 p) {
  std::vector<u32> v(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<u32>(index % p);
    index /= p;
  }
  return v;
}

std::uint64_t vector_to_index(const std::vector<u32>& v, u32 p) {
  std::uint64_t idx = 0;
  for (u32 e : v) idx = idx * p + e % p;
  return idx;
}

}  // namespace zdg
