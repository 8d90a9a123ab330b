#include <doctest.h>

#include <set>

#include "zdg/catalog.hpp"
#include "zdg/graph.hpp"
#include "zdg/json_io.hpp"
#include "zdg/presentation.hpp"
#include "zdg/verify.hpp"

using namespace zdg;

TEST_CASE("catalog generation pins expected invariants") {
  CatalogRing chain = generate(FamilySpec{Family::CHAIN, Prime(3), 5});
  CHECK(chain.expected.omega_exact == 3);
  CHECK(chain.expected.socle_dim == 1);

  CatalogRing gor = generate(FamilySpec{Family::LEN5_H131_GOR, Prime(3), 0});
  CHECK(gor.expected.omega_exact == 4);
  CHECK(gor.expected.gorenstein);

  CatalogRing soc3 = generate(FamilySpec{Family::LEN5_H131_SOC3, Prime(2), 0});
  CHECK(soc3.expected.socle_dim == 3);
  CHECK(soc3.expected.omega_exact == 2);

  CatalogRing triv = generate(FamilySpec{Family::TRIVEXT_LEN6, Prime(2), 0});
  CHECK(triv.expected.length == 6);
  CHECK(triv.ring.invariants().hilbert == std::vector<std::size_t>{1, 4, 1});

  CHECK_THROWS(generate(FamilySpec{Family::CHAIN, Prime(2), 0}));
}

TEST_CASE("corpora cover the advertised grid") {
  auto len5 = length5_corpus();
  CHECK(len5.size() >= 12);
  std::set<std::string> cases;
  for (const auto& r : len5) {
    CHECK(r.ring.invariants().length == 5);
    cases.insert(to_string(classify_length5(r.ring.invariants())));
  }
  CHECK(cases.size() == 4);  // all four length-5 Hilbert patterns

  auto len4 = length4_corpus();
  CHECK(len4.size() == 9);
  for (const auto& r : len4) CHECK(r.ring.invariants().length == 4);
}

TEST_CASE("every family name round-trips") {
  for (Family f : all_families()) CHECK(family_from_string(to_string(f)) == f);
  CHECK(!family_from_string("NOPE").has_value());
}

TEST_CASE("matrix JSON round trip") {
  Matrix m(Prime(3), 2, 3, {0, 1, 2, 1, 0, 0});
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

TEST_CASE("ring JSON round trip and presentation envelope") {
  FiniteAlgebra r = compile_presentation("GF(2)[x,y]/(x*y, x^3, y^3)");
  nlohmann::json j = ring_to_json(r, "GF(2)[x,y]/(x*y, x^3, y^3)");
  CHECK(j.at("format") == "zdglab-ring-v1");
  FiniteAlgebra back = ring_from_json(j);
  CHECK(back.table() == r.table());
  CHECK(back.basis_labels() == r.basis_labels());

  nlohmann::json pres_only{{"format", "zdglab-ring-v1"},
                           {"presentation", "GF(2)[x,y]/(x*y, x^3, y^3)"}};
  FiniteAlgebra from_pres = ring_from_json(pres_only);
  CHECK(from_pres.table() == r.table());

  CHECK_THROWS(ring_from_json(nlohmann::json{{"format", "unknown"}}));
}

TEST_CASE("graph JSON round trip") {
  FiniteAlgebra r = compile_presentation("GF(3)[x]/(x^5)");
  CompressedGraph g = build_gamma_e(r);
  GraphReport rep = clique_number(g);
  nlohmann::json j = graph_to_json(g, r, rep);
  LoadedGraph back = graph_from_json(j);
  CHECK(back.graph.vertex_count() == g.vertex_count());
  CHECK(back.graph.edge_count() == g.edge_count());
  CHECK(back.report.clique_number == rep.clique_number);
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t k = 0; k < g.vertex_count(); ++k)
      CHECK(back.graph.adjacent(i, k) == g.adjacent(i, k));
}

TEST_CASE("canonical serialization is byte stable") {
  FiniteAlgebra r = compile_presentation("GF(2)[x]/(x^3)");
  std::string a = to_canonical_string(ring_to_json(r));
  std::string b = to_canonical_string(ring_to_json(compile_presentation("GF(2)[x]/(x^3)")));
  CHECK(a == b);
  CHECK(a.back() == '\n');
}

TEST_CASE("suite names round-trip and LEN4 suite passes") {
  for (Suite s : all_suites()) CHECK(suite_from_string(to_string(s)) == s);
  CHECK(!suite_from_string("NOPE").has_value());

  SuiteResult res = run_suite(Suite::LEN4);
  CHECK(res.passed());
  CHECK(!res.items.empty());
  nlohmann::json rep = report_to_json({res});
  CHECK(rep.at("format") == "zdglab-report-v1");
  CHECK(rep.at("suites").size() == 1);
  CHECK(rep.at("suites")[0].at("passed") == true);
}
