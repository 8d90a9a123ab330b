#include <doctest.h>

#include <algorithm>

#include "zdg/algebra.hpp"
#include "zdg/presentation.hpp"

using namespace zdg;

namespace {

Element by_label(const FiniteAlgebra& r, const std::string& label) {
  const auto& labels = r.basis_labels();
  auto it = std::find(labels.begin(), labels.end(), label);
  REQUIRE(it != labels.end());
  return r.basis_element(static_cast<std::size_t>(it - labels.begin()));
}

}  // namespace

TEST_CASE("multiplication and units in chain rings") {
  FiniteAlgebra r = compile_presentation("GF(3)[x]/(x^5)");
  Element x = by_label(r, "x");
  CHECK(r.is_zero(r.mul(r.pow(x, 2), r.pow(x, 3))));
  CHECK(r.mul(r.one(), x).coords == x.coords);
  CHECK(r.is_unit(r.one()));
  CHECK(!r.is_unit(r.zero()));

  FiniteAlgebra r2 = compile_presentation("GF(2)[x]/(x^5)");
  CHECK(r2.is_unit(r2.add(r2.one(), by_label(r2, "x"))));
}

TEST_CASE("product expansion in the (1,2,2) ring") {
  FiniteAlgebra r = compile_presentation("GF(2)[x,y]/(x*y, x^3, y^3)");
  Element s = r.add(by_label(r, "x"), by_label(r, "y"));
  Element expect = r.add(by_label(r, "x^2"), by_label(r, "y^2"));
  CHECK(r.mul(s, s).coords == expect.coords);
}

TEST_CASE("annihilator: fixed example and brute-force oracle") {
  FiniteAlgebra r = compile_presentation("GF(2)[x,y]/(x*y, x^3, y^3)");
  Element x = by_label(r, "x");
  IdealSub ann = r.annihilator(x);
  CHECK(ann.space.dim() == 3);
  CHECK(ann.space.contains(by_label(r, "y").coords));
  CHECK(ann.space.contains(by_label(r, "x^2").coords));
  CHECK(ann.space.contains(by_label(r, "y^2").coords));

  CHECK(r.annihilator(r.zero()).space.dim() == r.dim());
  CHECK(r.annihilator(r.one()).space.dim() == 0);

  // Oracle: scan all 32 elements.
  for (std::uint64_t ia = 0; ia < r.element_count(); ++ia) {
    Element a = r.element_from_index(ia);
    IdealSub k = r.annihilator(a);
    for (std::uint64_t ib = 0; ib < r.element_count(); ++ib) {
      Element b = r.element_from_index(ib);
      CHECK(r.is_zero(r.mul(a, b)) == k.space.contains(b.coords));
    }
  }
}

TEST_CASE("ideal operations") {
  FiniteAlgebra r = compile_presentation("GF(3)[x]/(x^5)");
  CHECK(r.ideal_generated({}).space.dim() == 0);
  IdealSub m = r.locality().max_ideal;
  IdealSub m2 = r.ideal_power(m, 2);
  CHECK(m2.space.dim() == 3);
  CHECK(m2.space.contains(by_label(r, "x^2").coords));
  CHECK(m2.space.contains(by_label(r, "x^4").coords));
  CHECK(!m2.space.contains(by_label(r, "x").coords));

  FiniteAlgebra s = compile_presentation("GF(2)[x,y]/(x*y, x^3, y^3)");
  CHECK(s.ideal_power(s.locality().max_ideal, 3).space.dim() == 0);
}

TEST_CASE("locality detection") {
  FiniteAlgebra a = compile_presentation("GF(2)[x]/(x^2)");
  CHECK(a.locality().is_local);
  CHECK(a.locality().residue_degree == 1);
  CHECK(a.locality().max_ideal.space.dim() == 1);

  FiniteAlgebra f3 = compile_presentation("GF(3)[x]/(x^1)");
  FiniteAlgebra pr = product(f3, f3);
  CHECK(!pr.locality().is_local);

  // F_2[t]/(t^2+t+1) is the field F_4: local with m = 0, residue degree 2.
  FiniteAlgebra f4 = compile_presentation("GF(2)[t]/(t^2 + t + 1)");
  CHECK(f4.locality().is_local);
  CHECK(f4.locality().max_ideal.space.dim() == 0);
  CHECK(f4.locality().residue_degree == 2);
}

TEST_CASE("socle fixed examples") {
  FiniteAlgebra r = compile_presentation("GF(3)[x]/(x^5)");
  IdealSub soc = r.socle();
  CHECK(soc.space.dim() == 1);
  CHECK(soc.space.contains(by_label(r, "x^4").coords));

  FiniteAlgebra s = compile_presentation("GF(2)[x,y,z]/(x^2, x*y, x*z, y^2, y*z, z^3)");
  IdealSub ssoc = s.socle();
  CHECK(ssoc.space.dim() == 3);
  CHECK(ssoc.space.contains(by_label(s, "x").coords));
  CHECK(ssoc.space.contains(by_label(s, "y").coords));
  CHECK(ssoc.space.contains(by_label(s, "z^2").coords));
}

TEST_CASE("invariants fixed examples") {
  FiniteAlgebra r = compile_presentation("GF(3)[x]/(x^5)");
  const RingInvariants& inv = r.invariants();
  CHECK(inv.is_local);
  CHECK(inv.length == 5);
  CHECK(inv.hilbert == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(inv.socle_dim == 1);
  CHECK(inv.is_gorenstein);
  CHECK(inv.nilpotency_index == 5);
  CHECK(classify_length5(inv) == Length5Case::PIR_CHAIN);

  FiniteAlgebra s = compile_presentation("GF(2)[x,y,z]/(x^2, x*y, x*z, y^2, y*z, z^2)");
  CHECK(s.invariants().length == 4);
  CHECK(s.invariants().hilbert == std::vector<std::size_t>{1, 3});

  FiniteAlgebra t = compile_presentation("GF(2)[x,y]/(x*y, x^3, y^3)");
  CHECK(t.invariants().length == 5);
  CHECK(t.invariants().hilbert == std::vector<std::size_t>{1, 2, 2});
  CHECK(t.invariants().socle_dim == 2);
  CHECK(classify_length5(t.invariants()) == Length5Case::H122);
}

TEST_CASE("classify_length5 rejects impossible Hilbert data") {
  RingInvariants inv;
  inv.is_local = true;
  inv.length = 5;
  inv.hilbert = {1, 4};
  CHECK_THROWS_AS(classify_length5(inv), std::logic_error);
}

TEST_CASE("products and local decomposition") {
  FiniteAlgebra a = compile_presentation("GF(2)[x]/(x^2)");
  FiniteAlgebra b = compile_presentation("GF(2)[x]/(x^3)");
  FiniteAlgebra pr = product(a, b);
  CHECK(pr.dim() == 5);
  CHECK(!pr.invariants().is_local);
  CHECK(pr.invariants().length == 5);
  auto factors = local_decomposition(pr);
  REQUIRE(factors.size() == 2);
  std::vector<std::size_t> dims{factors[0].dim(), factors[1].dim()};
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{2, 3});

  // x is idempotent in F_2[x]/(x^2+x); CRT splits into F_2 x F_2.
  FiniteAlgebra crt = compile_presentation("GF(2)[x]/(x^2 + x)");
  auto parts = local_decomposition(crt);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].dim() == 1);
  CHECK(parts[1].dim() == 1);
}

TEST_CASE("trivial extension") {
  FiniteAlgebra f2 = compile_presentation("GF(2)[x]/(x^1)");
  FiniteAlgebra dual_numbers = trivial_extension(f2);
  CHECK(dual_numbers.dim() == 2);
  CHECK(dual_numbers.invariants().length == 2);
  CHECK(dual_numbers.invariants().is_gorenstein);

  FiniteAlgebra a = compile_presentation("GF(2)[x,y]/(x^2, x*y, y^2)");
  FiniteAlgebra e = trivial_extension(a);
  CHECK(e.dim() == 6);
  const RingInvariants& inv = e.invariants();
  CHECK(inv.is_local);
  CHECK(inv.length == 6);
  CHECK(inv.hilbert == std::vector<std::size_t>{1, 4, 1});
  CHECK(inv.socle_dim == 1);
  CHECK(inv.is_gorenstein);
}

TEST_CASE("socle contains the last nonzero power of m") {
  for (const char* pres :
       {"GF(3)[x]/(x^5)", "GF(2)[x,y]/(x*y, x^3, y^3)",
        "GF(3)[x,y,z]/(x*y, x*z, y*z, x^2 - y^2, x^2 - z^2)"}) {
    FiniteAlgebra r = compile_presentation(pres);
    const auto& inv = r.invariants();
    IdealSub last = r.ideal_power(r.locality().max_ideal, inv.nilpotency_index - 1);
    CHECK(r.socle().space.contains(last.space));
  }
}
