#include "zdg/json_io.hpp"

#include <sstream>

#include "zdg/presentation.hpp"

namespace zdg {

using nlohmann::json;

namespace {

std::string hex_encode(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    entries.push_back(std::move(row));
  }
  return json{{"p", m.prime().p},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j) {
  Prime p(j.at("p").get<u32>());
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  const json& entries = j.at("entries");
  if (entries.size() != rows) throw std::invalid_argument("matrix JSON: row count mismatch");
  std::vector<u32> flat;
  flat.reserve(rows * cols);
  for (const auto& row : entries) {
    if (row.size() != cols)
      throw std::invalid_argument("matrix JSON: column count mismatch");
    for (const auto& e : row) flat.push_back(e.get<u32>());
  }
  return Matrix(p, rows, cols, std::move(flat));
}

json ring_to_json(const FiniteAlgebra& r, const std::string& presentation) {
  json table = json::array();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    json row = json::array();
    for (std::size_t j2 = 0; j2 < r.dim(); ++j2) {
      json entry = json::array();
      for (u32 c : r.table()[i][j2]) entry.push_back(c);
      row.push_back(std::move(entry));
    }
    table.push_back(std::move(row));
  }
  json one = json::array();
  for (u32 c : r.one().coords) one.push_back(c);
  json out{{"format", "zdglab-ring-v1"},
           {"p", r.prime().p},
           {"dim", r.dim()},
           {"labels", r.basis_labels()},
           {"one", std::move(one)},
           {"table", std::move(table)}};
  if (!presentation.empty()) out["presentation"] = presentation;
  return out;
}

FiniteAlgebra ring_from_json(const json& j) {
  if (j.at("format").get<std::string>() != "zdglab-ring-v1")
    throw std::invalid_argument("ring JSON: unknown format field");
  if (!j.contains("table")) {
    if (!j.contains("presentation"))
      throw std::invalid_argument("ring JSON: neither table nor presentation present");
    return compile_presentation(j.at("presentation").get<std::string>());
  }
  Prime p(j.at("p").get<u32>());
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  std::vector<u32> one = j.at("one").get<std::vector<u32>>();
  const json& table = j.at("table");
  if (labels.size() != dim || table.size() != dim)
    throw std::invalid_argument("ring JSON: dim mismatch");
  std::vector<std::vector<std::vector<u32>>> t;
  for (const auto& row : table) {
    std::vector<std::vector<u32>> trow;
    for (const auto& entry : row) trow.push_back(entry.get<std::vector<u32>>());
    t.push_back(std::move(trow));
  }
  // The FiniteAlgebra constructor rejects non-commutative or
  // non-associative tables with the violating triple named.
  return FiniteAlgebra(p, std::move(labels), std::move(t), std::move(one));
}

json graph_to_json(const CompressedGraph& g, const FiniteAlgebra& r,
                   const GraphReport& report) {
  json vertices = json::array();
  for (const auto& v : g.vertices()) {
    json coords = json::array();
    for (u32 c : v.representative.coords) coords.push_back(c);
    vertices.push_back(json{{"representative", std::move(coords)},
                            {"label", r.format_element(v.representative)},
                            {"ann_key", hex_encode(v.ann_key)},
                            {"class_size", v.class_size}});
  }
  json edges = json::array();
  for (auto [i, j2] : g.edges()) edges.push_back(json::array({i, j2}));
  json witness = json::array();
  for (std::size_t i : report.witness_clique) witness.push_back(i);
  return json{{"format", "zdglab-graph-v1"},
              {"ring", ring_to_json(r)},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"clique_number", report.clique_number},
              {"witness", std::move(witness)}};
}

LoadedGraph graph_from_json(const json& j) {
  if (j.at("format").get<std::string>() != "zdglab-graph-v1")
    throw std::invalid_argument("graph JSON: unknown format field");
  FiniteAlgebra ring = ring_from_json(j.at("ring"));
  std::vector<GraphVertex> vertices;
  for (const auto& v : j.at("vertices")) {
    Element rep{v.at("representative").get<std::vector<u32>>()};
    GraphVertex gv{rep, kernel(ring.mult_matrix(rep)).canonical_key(),
                   v.at("class_size").get<std::uint64_t>()};
    vertices.push_back(std::move(gv));
  }
  const std::size_t n = vertices.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : j.at("edges")) {
    std::size_t a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
    adj[a][b] = adj[b][a] = true;
  }
  GraphReport rep;
  rep.vertex_count = n;
  rep.clique_number = j.at("clique_number").get<std::size_t>();
  rep.witness_clique = j.at("witness").get<std::vector<std::size_t>>();
  CompressedGraph g(std::move(vertices), std::move(adj), GraphBuild::FAST);
  rep.edge_count = g.edge_count();
  return LoadedGraph{std::move(g), std::move(rep)};
}

std::string to_canonical_string(const json& j) { return j.dump(2) + "\n"; }

}  // namespace zdg
