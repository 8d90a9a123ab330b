#pragma once

#include <string>

#include <json.hpp>

#include "zdg/algebra.hpp"
#include "zdg/gf.hpp"
#include "zdg/graph.hpp"

// Interchange formats: zdglab-ring-v1 and zdglab-graph-v1 envelopes and
// the Matrix encoding used inside them. Serialization is canonical so
// files are byte-stable across runs.

namespace zdg {

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

/// `{"format":"zdglab-ring-v1","p":..,"dim":..,"labels":[..],"one":[..],
///   "table":[[[..]]]}`; an optional "presentation" field is embedded when
/// the ring came from one.
nlohmann::json ring_to_json(const FiniteAlgebra& r, const std::string& presentation = "");

/// Accepts either the structure-constant form or a bare
/// `{"format":"zdglab-ring-v1","presentation":"GF(2)[x]/(x^2)"}` envelope;
/// both produce the same algebra for the same ring.
FiniteAlgebra ring_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const CompressedGraph& g, const FiniteAlgebra& r,
                             const GraphReport& report);

struct LoadedGraph {
  CompressedGraph graph;
  GraphReport report;
};
LoadedGraph graph_from_json(const nlohmann::json& j);

/// Canonical serialization used for files: 2-space indent, keys in
/// sorted order (nlohmann::json's default object ordering).
std::string to_canonical_string(const nlohmann::json& j);

}  // namespace zdg
