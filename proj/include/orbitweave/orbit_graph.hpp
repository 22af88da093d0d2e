// Copyright 2026 The OrbitWeave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The weak-order graph of a spherical variety: vertices are Borel-orbit
// closures with a dimension and an optional rank, edges are labeled by a
// simple root and typed U, T or N (N is the double edge).
//
// An OrbitGraph only enforces what is needed to be a graph at all (unique
// ids, existing endpoints, no repeated (src, dst, label) triple, labels in
// range). Everything else is checked by validate_structure(), which reports
// every violated rule with a witness instead of throwing.

#ifndef ORBITWEAVE_ORBIT_GRAPH_HPP_
#define ORBITWEAVE_ORBIT_GRAPH_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "orbitweave/weyl.hpp"

namespace orbitweave {

enum class EdgeType { kU, kT, kN };

char to_char(EdgeType type);
EdgeType edge_type_from_char(char c);
inline bool is_double(EdgeType type) { return type == EdgeType::kN; }
// T and N edges raise the rank by one.
inline bool raises_rank(EdgeType type) { return type != EdgeType::kU; }

struct OrbitVertex {
  std::string id;
  int dim = 0;
  std::optional<int> rank;
};

struct OrbitEdge {
  std::string src;
  std::string dst;
  std::size_t label = 0;
  EdgeType type = EdgeType::kU;
};

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

class OrbitGraph {
 public:
  explicit OrbitGraph(CartanDatum cartan) : cartan_(std::move(cartan)) {}

  const CartanDatum& cartan() const noexcept { return cartan_; }

  VertexIndex add_vertex(OrbitVertex vertex);
  EdgeIndex add_edge(OrbitEdge edge);

  std::optional<int> rank_of_top() const noexcept { return rank_of_top_; }
  void set_rank_of_top(std::optional<int> rank) { rank_of_top_ = rank; }
  void set_rank(VertexIndex v, std::optional<int> rank) {
    vertices_.at(v).rank = rank;
  }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<OrbitVertex>& vertices() const noexcept {
    return vertices_;
  }
  const std::vector<OrbitEdge>& edges() const noexcept { return edges_; }
  const OrbitVertex& vertex(VertexIndex v) const { return vertices_.at(v); }
  const OrbitEdge& edge(EdgeIndex e) const { return edges_.at(e); }
  VertexIndex source(EdgeIndex e) const { return endpoints_.at(e).first; }
  VertexIndex target(EdgeIndex e) const { return endpoints_.at(e).second; }

  bool contains(std::string_view id) const;
  // Throws GraphError for unknown ids.
  VertexIndex index_of(std::string_view id) const;

  const std::vector<EdgeIndex>& out_edges(VertexIndex v) const {
    return out_.at(v);
  }
  const std::vector<EdgeIndex>& in_edges(VertexIndex v) const {
    return in_.at(v);
  }

  // Vertices sorted by (dim, id); edges sorted by (src, dst, label).
  std::vector<VertexIndex> sorted_vertices() const;
  std::vector<EdgeIndex> sorted_edges() const;

  bool has_all_ranks() const;

 private:
  CartanDatum cartan_;
  std::optional<int> rank_of_top_;
  std::vector<OrbitVertex> vertices_;
  std::vector<OrbitEdge> edges_;
  std::vector<std::pair<VertexIndex, VertexIndex>> endpoints_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
  std::unordered_map<std::string, VertexIndex> ids_;
  std::set<std::tuple<VertexIndex, VertexIndex, std::size_t>> triples_;
};

enum class Severity { kWarning, kError };

struct Finding {
  std::string check;  // short rule name, e.g. "dimension"
  Severity severity = Severity::kError;
  std::string message;
  std::vector<std::string> witness;  // vertex ids, edge renderings, paths
};

struct CertificationReport {
  std::string layer;
  std::vector<Finding> findings;

  bool passed() const;
  std::size_t error_count() const;
  void add(std::string check, Severity severity, std::string message,
           std::vector<std::string> witness = {});
  void append(const CertificationReport& other);
};

struct ValidationOptions {
  // Single-source T edges become warnings instead of errors.
  bool allow_truncated = false;
};

std::string edge_to_string(const OrbitGraph& g, EdgeIndex e);

CertificationReport validate_structure(const OrbitGraph& g,
                                       const ValidationOptions& options = {});

// Weakly connected components, each with its unique maximal vertex when
// there is one.
struct Component {
  std::vector<VertexIndex> members;
  std::vector<VertexIndex> maximal;  // vertices without outgoing edges
};
std::vector<Component> components(const OrbitGraph& g);
// The maximal vertex reached from v. Assumes a validated graph, where
// every component has exactly one.
VertexIndex top_of(const OrbitGraph& g, VertexIndex v);

// Simple roots labeling no edge incident to `id`.
std::vector<std::size_t> delta_of(const OrbitGraph& g, std::string_view id);

struct EdgeStatus {
  enum class Kind { kStabilizes, kRaises, kLoweredBy };
  Kind kind = Kind::kStabilizes;
  std::optional<EdgeType> type;
  std::vector<std::string> others;  // raise target or lowering sources
};
EdgeStatus edge_status(const OrbitGraph& g, std::string_view id,
                       std::size_t label);

// Target of the label-`label` edge out of `id`, or `id` itself.
std::string monoid_raise(const OrbitGraph& g, std::string_view id,
                         std::size_t label);

// Vertices Y' with id <= Y' in the weak order (including id itself).
std::set<VertexIndex> upper_set(const OrbitGraph& g, VertexIndex v);

// Assigns every rank from the ranks of the component tops. Throws
// CertificationError with two witness paths when paths to the top disagree,
// or when a given rank contradicts the inferred one.
OrbitGraph infer_ranks(const OrbitGraph& g,
                       const std::map<std::string, int>& rank_of_top);
OrbitGraph infer_ranks(const OrbitGraph& g, int rank_of_top);
// Uses existing ranks, else the graph's rank_of_top; nullopt if neither
// pins a component.
std::optional<OrbitGraph> with_ranks(const OrbitGraph& g);

}  // namespace orbitweave

#endif  // ORBITWEAVE_ORBIT_GRAPH_HPP_
