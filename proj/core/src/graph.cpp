#include "zdg/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace zdg {

CompressedGraph::CompressedGraph(std::vector<GraphVertex> vertices,
                                 std::vector<std::vector<bool>> adjacency, GraphBuild build)
    : vertices_(std::move(vertices)), adjacency_(std::move(adjacency)), build_(build) {}

std::size_t CompressedGraph::edge_count() const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < vertex_count(); ++i)
    for (std::size_t j = i + 1; j < vertex_count(); ++j)
      if (adjacency_[i][j]) ++e;
  return e;
}

std::vector<std::pair<std::size_t, std::size_t>> CompressedGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < vertex_count(); ++i)
    for (std::size_t j = i + 1; j < vertex_count(); ++j)
      if (adjacency_[i][j]) out.emplace_back(i, j);
  return out;
}

CompressedGraph build_gamma_e(const FiniteAlgebra& r) {
  const std::uint64_t count = r.element_count();
  if (count > max_enumeration_bound())
    throw std::runtime_error("build_gamma_e: |R| exceeds the enumeration bound");
  // Group nonzero zero-divisors by the canonical key of their annihilator.
  std::map<std::string, GraphVertex> classes;
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    Element a = r.element_from_index(idx);
    Subspace ann = kernel(r.mult_matrix(a));
    if (ann.dim() == 0) continue;  // unit
    std::string key = ann.canonical_key();
    auto it = classes.find(key);
    if (it == classes.end())
      classes.emplace(std::move(key), GraphVertex{a, ann.canonical_key(), 1});
    else
      ++it->second.class_size;
  }
  std::vector<GraphVertex> vertices;
  for (auto& [key, v] : classes) vertices.push_back(std::move(v));  // sorted by ann_key
  const std::size_t n = vertices.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool zero = r.is_zero(r.mul(vertices[i].representative, vertices[j].representative));
      adj[i][j] = adj[j][i] = zero;
    }
  return CompressedGraph(std::move(vertices), std::move(adj), GraphBuild::FAST);
}

CompressedGraph oracle_gamma_e(const FiniteAlgebra& r) {
  const std::uint64_t count = r.element_count();
  if (count > 729)
    throw std::runtime_error("oracle_gamma_e: |R| exceeds the oracle bound of 3^6");
  // Annihilators as explicit element-index sets; products only, no kernels.
  std::map<std::vector<std::uint64_t>, GraphVertex> classes;
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    Element a = r.element_from_index(idx);
    std::vector<std::uint64_t> ann;
    for (std::uint64_t jdx = 0; jdx < count; ++jdx) {
      Element x = r.element_from_index(jdx);
      if (r.is_zero(r.mul(a, x))) ann.push_back(jdx);
    }
    if (ann.size() == 1) continue;  // only 0 kills a: a is a unit here
    auto it = classes.find(ann);
    if (it == classes.end())
      classes.emplace(std::move(ann), GraphVertex{a, "", 1});
    else
      ++it->second.class_size;
  }
  std::vector<GraphVertex> vertices;
  for (auto& [ann, v] : classes) {
    // Key the vertex by its annihilator element set so ordering is canonical.
    std::ostringstream key;
    for (auto e : ann) key << e << ",";
    v.ann_key = key.str();
    vertices.push_back(std::move(v));
  }
  const std::size_t n = vertices.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool zero = r.is_zero(r.mul(vertices[i].representative, vertices[j].representative));
      adj[i][j] = adj[j][i] = zero;
    }
  return CompressedGraph(std::move(vertices), std::move(adj), GraphBuild::ORACLE);
}

std::size_t class_of(const CompressedGraph& g, const FiniteAlgebra& r, const Element& a) {
  std::string key = kernel(r.mult_matrix(a)).canonical_key();
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.vertices()[i].ann_key == key) return i;
  throw std::invalid_argument("class_of: element has no class in this graph");
}

namespace {

// Branch and bound with a greedy coloring upper bound.
struct CliqueSolver {
  const CompressedGraph& g;
  std::vector<std::size_t> best, current;

  void expand(std::vector<std::size_t> cand) {
    if (cand.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    // Greedy coloring; a vertex's color bounds the clique it can extend.
    std::vector<std::size_t> color(cand.size(), 0);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::size_t c = 1;
      while (true) {
        bool clash = false;
        for (std::size_t j = 0; j < i; ++j)
          if (color[j] == c && g.adjacent(cand[i], cand[j])) {
            clash = true;
            break;
          }
        if (!clash) break;
        ++c;
      }
      color[i] = c;
    }
    std::vector<std::size_t> order(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    // Highest color first; earlier candidates stay available to later branches.
    for (std::size_t i = order.size(); i-- > 0;) {
      std::size_t oi = order[i];
      if (current.size() + color[oi] <= best.size()) return;
      std::size_t v = cand[oi];
      current.push_back(v);
      std::vector<std::size_t> next;
      for (std::size_t k = 0; k < i; ++k)
        if (g.adjacent(cand[order[k]], v)) next.push_back(cand[order[k]]);
      expand(std::move(next));
      current.pop_back();
    }
  }
};

}  // namespace

std::size_t clique_number_naive(const CompressedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 25) throw std::runtime_error("clique_number_naive: too many vertices");
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<std::size_t> set;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) set.push_back(i);
    if (set.size() <= best) continue;
    bool clique = true;
    for (std::size_t i = 0; i < set.size() && clique; ++i)
      for (std::size_t j = i + 1; j < set.size() && clique; ++j)
        if (!g.adjacent(set[i], set[j])) clique = false;
    if (clique) best = set.size();
  }
  return best;
}

GraphReport clique_number(const CompressedGraph& g) {
  GraphReport rep;
  rep.vertex_count = g.vertex_count();
  rep.edge_count = g.edge_count();
  rep.build = g.build();
  if (g.vertex_count() == 0) return rep;
  CliqueSolver solver{g, {}, {}};
  std::vector<std::size_t> cand(g.vertex_count());
  for (std::size_t i = 0; i < cand.size(); ++i) cand[i] = i;
  solver.expand(cand);
  rep.clique_number = solver.best.size();
  rep.witness_clique = solver.best;
  std::sort(rep.witness_clique.begin(), rep.witness_clique.end());
  if (g.vertex_count() <= 20 && clique_number_naive(g) != rep.clique_number)
    throw std::logic_error("clique_number: branch-and-bound disagrees with enumeration");
  return rep;
}

std::string export_dot(const CompressedGraph& g, const FiniteAlgebra& r) {
  std::ostringstream out;
  out << "graph gamma_e {\n";
  for (const auto& v : g.vertices())
    out << "  \"" << r.format_element(v.representative) << "\";\n";
  for (auto [i, j] : g.edges())
    out << "  \"" << r.format_element(g.vertices()[i].representative) << "\" -- \""
        << r.format_element(g.vertices()[j].representative) << "\";\n";
  out << "}\n";
  return out.str();
}

bool graphs_equivalent(const CompressedGraph& a, const CompressedGraph& b,
                       const FiniteAlgebra& r) {
  if (a.vertex_count() != b.vertex_count()) return false;
  const std::uint64_t count = r.element_count();
  // Canonical class id: the sorted element-index set of the annihilator.
  auto ann_set = [&](const Element& rep) {
    std::vector<std::uint64_t> ann;
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if (r.is_zero(r.mul(rep, r.element_from_index(idx)))) ann.push_back(idx);
    return ann;
  };
  std::map<std::vector<std::uint64_t>, std::size_t> index_a, index_b;
  for (std::size_t i = 0; i < a.vertex_count(); ++i)
    index_a[ann_set(a.vertices()[i].representative)] = i;
  for (std::size_t i = 0; i < b.vertex_count(); ++i)
    index_b[ann_set(b.vertices()[i].representative)] = i;
  if (index_a.size() != a.vertex_count() || index_b.size() != b.vertex_count()) return false;
  auto ita = index_a.begin();
  auto itb = index_b.begin();
  std::vector<std::size_t> map_ab(a.vertex_count());
  for (; ita != index_a.end(); ++ita, ++itb) {
    if (itb == index_b.end() || ita->first != itb->first) return false;
    map_ab[ita->second] = itb->second;
  }
  for (std::size_t i = 0; i < a.vertex_count(); ++i) {
    if (a.vertices()[i].class_size !=
        b.vertices()[map_ab[i]].class_size)
      return false;
    for (std::size_t j = 0; j < a.vertex_count(); ++j)
      if (a.adjacent(i, j) != b.adjacent(map_ab[i], map_ab[j])) return false;
  }
  return true;
}

}  // namespace zdg
