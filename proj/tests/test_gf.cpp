#include <doctest.h>

#include <set>

#include "zdg/gf.hpp"

using namespace zdg;

TEST_CASE("scalar helpers") {
  CHECK(gf_inv(2, 5) == 3);
  CHECK(gf_inv(1, 2) == 1);
  CHECK_THROWS(gf_inv(0, 5));
  CHECK(gf_pow(2, 4, 5) == 1);
  CHECK(gf_neg(0, 3) == 0);
  CHECK(gf_neg(2, 3) == 1);
  CHECK(gf_is_square(4, 5));
  CHECK(!gf_is_square(2, 5));
  CHECK_THROWS(Prime(4));
  CHECK_THROWS(Prime(101));
}

TEST_CASE("rref fixed examples") {
  Matrix id3 = Matrix::identity(Prime(2), 3);
  auto [r1, rank1] = rref(id3);
  CHECK(r1 == id3);
  CHECK(rank1 == 3);

  Matrix zero(Prime(3), 2, 3);
  auto [r2, rank2] = rref(zero);
  CHECK(r2 == zero);
  CHECK(rank2 == 0);

  Matrix m(Prime(5), 2, 2, {1, 2, 2, 4});
  auto [r3, rank3] = rref(m);
  CHECK(rank3 == 1);
  CHECK(r3 == Matrix(Prime(5), 2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref idempotent and rank-nullity over small exhaustive families") {
  // All 2x3 matrices over F_2 and all 2x2 matrices over F_3.
  for (u32 code = 0; code < 64; ++code) {
    std::vector<u32> e(6);
    for (std::size_t i = 0; i < 6; ++i) e[i] = (code >> i) & 1;
    Matrix m(Prime(2), 2, 3, e);
    auto [r, rk] = rref(m);
    CHECK(rref(r).first == r);
    CHECK(rk + kernel(m).dim() == 3);
  }
  for (u32 code = 0; code < 81; ++code) {
    u32 c = code;
    std::vector<u32> e(4);
    for (std::size_t i = 0; i < 4; ++i) { e[i] = c % 3; c /= 3; }
    Matrix m(Prime(3), 2, 2, e);
    auto [r, rk] = rref(m);
    CHECK(rref(r).first == r);
    CHECK(rk + kernel(m).dim() == 2);
  }
}

TEST_CASE("kernel fixed examples") {
  CHECK(kernel(Matrix::identity(Prime(3), 3)).dim() == 0);
  CHECK(kernel(Matrix(Prime(2), 2, 2)).dim() == 2);
  Subspace k = kernel(Matrix(Prime(2), 1, 2, {1, 1}));
  CHECK(k.dim() == 1);
  CHECK(k.contains({1, 1}));
  CHECK(!k.contains({1, 0}));
}

TEST_CASE("matrix inverse") {
  Matrix m(Prime(5), 2, 2, {1, 2, 3, 4});
  CHECK(is_invertible(m));
  CHECK(m.mul(inverse(m)) == Matrix::identity(Prime(5), 2));
  CHECK(!is_invertible(Matrix(Prime(5), 2, 2, {1, 2, 2, 4})));
  CHECK_THROWS(inverse(Matrix(Prime(5), 2, 2, {1, 2, 2, 4})));
}

TEST_CASE("subspace lattice operations") {
  Prime p2(2);
  Subspace e1 = Subspace::span(p2, 3, {{1, 0, 0}});
  Subspace e2 = Subspace::span(p2, 3, {{0, 1, 0}});
  CHECK(sum(e1, e2).dim() == 2);
  CHECK(intersect(e1, e1) == e1);

  Prime p3(3);
  Subspace whole = Subspace::span(p3, 2, {{1, 0}, {0, 1}});
  Subspace diag = Subspace::span(p3, 2, {{1, 1}});
  CHECK(intersect(whole, diag) == diag);
  CHECK(whole.contains(diag));
  CHECK(!diag.contains(whole));
}

TEST_CASE("canonical_key equals set equality (exhaustive, F_2 ambient 3)") {
  // Spans of all pairs drawn from F_2^3: equal keys iff equal element sets.
  std::vector<std::vector<u32>> pool;
  for (u32 i = 1; i < 8; ++i) pool.push_back({i & 1, (i >> 1) & 1, (i >> 2) & 1});
  std::vector<Subspace> spaces;
  for (const auto& a : pool)
    for (const auto& b : pool) spaces.push_back(Subspace::span(Prime(2), 3, {a, b}));
  auto elem_set = [](const Subspace& s) {
    std::set<std::vector<u32>> out;
    for (auto& v : s.enumerate()) out.insert(v);
    return out;
  };
  for (const auto& s : spaces)
    for (const auto& t : spaces)
      CHECK((s.canonical_key() == t.canonical_key()) == (elem_set(s) == elem_set(t)));
}

TEST_CASE("element indexing round trip") {
  for (std::uint64_t i = 0; i < 27; ++i) {
    auto v = index_to_vector(i, 3, 3);
    CHECK(vector_to_index(v, 3) == i);
  }
  CHECK(index_to_vector(1, 3, 3) == std::vector<u32>{0, 0, 1});
}
