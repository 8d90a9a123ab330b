#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdg/algebra.hpp"

// Compressed zero-divisor graphs: vertices are annihilator classes of
// nonzero zero-divisors, [a] adjacent to [b] iff ab = 0. Includes an
// independent element-scan oracle path and exact maximum clique.

namespace zdg {

struct GraphVertex {
  Element representative;   // enumeration-first element of the class
  std::string ann_key;      // canonical subspace key of ann(representative)
  std::uint64_t class_size; // number of ring elements in the class
};

enum class GraphBuild { FAST, ORACLE };

class CompressedGraph {
 public:
  CompressedGraph(std::vector<GraphVertex> vertices, std::vector<std::vector<bool>> adjacency,
                  GraphBuild build);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const;
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i][j]; }
  GraphBuild build() const { return build_; }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<std::vector<bool>> adjacency_;
  GraphBuild build_;
};

struct GraphReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t clique_number = 0;  // 0 for the empty graph, 1 for a single vertex
  std::vector<std::size_t> witness_clique;
  GraphBuild build = GraphBuild::FAST;
};

/// Gamma_E(R) via annihilator kernels; vertices sorted by ann_key.
CompressedGraph build_gamma_e(const FiniteAlgebra& r);

/// Same graph computed by scanning element products only; used for
/// cross-checks. Bound: |R| <= 729.
CompressedGraph oracle_gamma_e(const FiniteAlgebra& r);

/// Index of the class of a nonzero zero-divisor in the graph's vertex order.
std::size_t class_of(const CompressedGraph& g, const FiniteAlgebra& r, const Element& a);

/// Exact maximum clique (branch and bound with greedy coloring bound);
/// when vertex_count <= 20 a subset-enumeration oracle is run and must agree.
GraphReport clique_number(const CompressedGraph& g);

/// Naive maximum clique by subset enumeration; vertex_count <= 25.
std::size_t clique_number_naive(const CompressedGraph& g);

std::string export_dot(const CompressedGraph& g, const FiniteAlgebra& r);

/// True iff the two graphs have the same classes (as element sets of their
/// annihilators) and the same adjacency between them.
bool graphs_equivalent(const CompressedGraph& a, const CompressedGraph& b,
                       const FiniteAlgebra& r);

}  // namespace zdg
