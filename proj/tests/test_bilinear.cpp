#include <doctest.h>

#include "zdg/bilinear.hpp"
#include "zdg/presentation.hpp"

using namespace zdg;

namespace {

Matrix diag(Prime p, std::vector<u32> d) {
  Matrix m(p, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

}  // namespace

TEST_CASE("eval and radical fixed examples") {
  BilinearSpace id3(Matrix::identity(Prime(3), 3));
  CHECK(id3.eval({1, 0, 0}, {0, 1, 0}) == 0);
  CHECK(id3.eval({1, 0, 0}, {1, 0, 0}) == 1);
  CHECK(id3.radical().dim() == 0);
  CHECK(id3.is_nondegenerate());

  BilinearSpace zero3(Matrix(Prime(3), 3, 3));
  CHECK(zero3.radical().dim() == 3);
  CHECK(!zero3.is_nondegenerate());

  BilinearSpace d110(diag(Prime(3), {1, 1, 0}));
  CHECK(d110.radical().dim() == 1);
  CHECK(d110.radical().contains({0, 0, 1}));
  CHECK(!d110.is_nondegenerate());

  // diag(1,1,-1) over F_5: (1,2,0) is isotropic since 1 + 4 = 0.
  BilinearSpace m5(diag(Prime(5), {1, 1, 4}));
  CHECK(m5.eval({1, 2, 0}, {1, 2, 0}) == 0);

  CHECK_THROWS(BilinearSpace(Matrix(Prime(3), 2, 2, {0, 1, 2, 0})));  // asymmetric
}

TEST_CASE("orthogonal basis") {
  BilinearSpace hyp(Matrix(Prime(3), 2, 2, {0, 1, 1, 0}));
  auto basis = orthogonal_basis(hyp);
  REQUIRE(basis.size() == 2);
  CHECK(hyp.eval(basis[0], basis[1]) == 0);
  CHECK(hyp.eval(basis[0], basis[0]) != 0);

  CHECK_THROWS_AS(orthogonal_basis(BilinearSpace(Matrix::identity(Prime(2), 2))),
                  UnsupportedCharacteristic);

  // Exhaustive over all symmetric 3x3 Grams over F_3: the diagonal zero
  // count equals the radical dimension.
  for (u32 code = 0; code < 729; ++code) {
    u32 c = code;
    u32 v[6];
    for (int i = 0; i < 6; ++i) { v[i] = c % 3; c /= 3; }
    Matrix g(Prime(3), 3, 3);
    g.set(0, 0, v[0]); g.set(1, 1, v[1]); g.set(2, 2, v[2]);
    g.set(0, 1, v[3]); g.set(1, 0, v[3]);
    g.set(0, 2, v[4]); g.set(2, 0, v[4]);
    g.set(1, 2, v[5]); g.set(2, 1, v[5]);
    BilinearSpace space(g);
    auto b = orthogonal_basis(space);
    REQUIRE(b.size() == 3);
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j) CHECK(space.eval(b[i], b[j]) == 0);
        else if (space.eval(b[i], b[i]) == 0) ++zeros;
      }
    CHECK(zeros == space.radical().dim());
  }
}

TEST_CASE("split_radical") {
  RadicalSplit s = split_radical(BilinearSpace(diag(Prime(2), {1, 0})));
  CHECK(s.radical.dim() == 1);
  CHECK(s.complement_space.dim() == 1);
  CHECK(s.complement_space.is_nondegenerate());

  RadicalSplit z = split_radical(BilinearSpace(Matrix(Prime(3), 2, 2)));
  CHECK(z.radical.dim() == 2);
  CHECK(z.complement_space.dim() == 0);

  BilinearSpace nd(Matrix::identity(Prime(3), 3));
  RadicalSplit n = split_radical(nd);
  CHECK(n.radical.dim() == 0);
  CHECK(n.complement_space.dim() == 3);
}

TEST_CASE("isotropic family") {
  BilinearSpace m5(diag(Prime(5), {1, 1, 4}));
  auto fam = isotropic_family(m5, {1, 2, 0}, 4);
  REQUIRE(fam.size() == 4);
  for (const auto& u : fam)
    for (const auto& v : fam) CHECK(m5.eval(u, v) == 0);
  auto single = isotropic_family(m5, {1, 2, 0}, 1);
  CHECK(single == std::vector<std::vector<u32>>{{1, 2, 0}});
  CHECK_THROWS(isotropic_family(m5, {1, 0, 0}, 2));  // not isotropic
  CHECK_THROWS(isotropic_family(m5, {1, 2, 0}, 5));  // m > p - 1
}

TEST_CASE("orthogonal set search") {
  auto none = search_orthogonal_sets(BilinearSpace(Matrix::identity(Prime(3), 3)), 4, true);
  CHECK(none.witnesses.empty());
  CHECK(!none.budget_exceeded);

  auto dim1 = search_orthogonal_sets(BilinearSpace(Matrix::identity(Prime(3), 1)), 2, true);
  CHECK(dim1.witnesses.empty());

  auto found = search_orthogonal_sets(BilinearSpace(diag(Prime(5), {1, 1, 4})), 4, false);
  CHECK(!found.witnesses.empty());
}

TEST_CASE("gram enumeration helpers") {
  auto all2 = all_nondegenerate_symmetric_grams(Prime(2), 2);
  for (const auto& g : all2) {
    CHECK(g.is_symmetric());
    CHECK(is_invertible(g));
  }
  // Symmetric invertible 2x2 over F_2: entries (a,b,d) with ad - b^2 = 1.
  CHECK(all2.size() == 4);

  auto reps = congruence_representative_grams(Prime(5), 3);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == Matrix::identity(Prime(5), 3));
  CHECK(reps[1].at(2, 2) != 1);
  CHECK(!gf_is_square(reps[1].at(2, 2), 5));
  CHECK_THROWS(congruence_representative_grams(Prime(2), 3));
}

TEST_CASE("phi construction on the Gorenstein (1,3,1) ring") {
  FiniteAlgebra r =
      compile_presentation("GF(3)[x,y,z]/(x*y, x*z, y*z, x^2 - y^2, x^2 - z^2)");
  PhiConstruction phi = PhiConstruction::build(r);
  CHECK(phi.space().dim() == 3);
  CHECK(phi.space().is_nondegenerate());
  CHECK(phi.space().radical().dim() == 0);
  auto rep = phi.socle_radical_check();
  CHECK(rep.all_pass());
}

TEST_CASE("phi construction radical tracks the socle") {
  FiniteAlgebra soc2 =
      compile_presentation("GF(3)[x,y,z]/(x^2, x*y, x*z, y*z, y^2 - z^2)");
  PhiConstruction phi2 = PhiConstruction::build(soc2);
  CHECK(phi2.space().radical().dim() == 1);
  CHECK(phi2.socle_radical_check().all_pass());

  FiniteAlgebra soc3 =
      compile_presentation("GF(2)[x,y,z]/(x^2, x*y, x*z, y^2, y*z, z^3)");
  PhiConstruction phi3 = PhiConstruction::build(soc3);
  CHECK(phi3.space().radical().dim() == 2);
  CHECK(phi3.socle_radical_check().all_pass());
}

TEST_CASE("phi construction rejects ineligible rings") {
  try {
    PhiConstruction::build(compile_presentation("GF(2)[x]/(x^4)"));
    CHECK(false);
  } catch (const PhiConstructionError& e) {
    CHECK(e.code == PhiError::M3_NONZERO);
  }
  try {
    PhiConstruction::build(compile_presentation("GF(2)[x]/(x^2)"));
    CHECK(false);
  } catch (const PhiConstructionError& e) {
    CHECK(e.code == PhiError::M2_NOT_PRINCIPAL);
  }
  try {
    FiniteAlgebra f3 = compile_presentation("GF(3)[x]/(x^1)");
    PhiConstruction::build(product(f3, f3));
    CHECK(false);
  } catch (const PhiConstructionError& e) {
    CHECK(e.code == PhiError::NOT_LOCAL);
  }
  try {
    PhiConstruction::build(compile_presentation("GF(2)[t]/(t^2 + t + 1)"));
    CHECK(false);
  } catch (const PhiConstructionError& e) {
    CHECK(e.code == PhiError::RESIDUE_DEG);
  }
}
