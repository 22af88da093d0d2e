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

#include "orbitweave/orbit_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "orbitweave/errors.hpp"

namespace orbitweave {

char to_char(EdgeType type) {
  switch (type) {
    case EdgeType::kU:
      return 'U';
    case EdgeType::kT:
      return 'T';
    case EdgeType::kN:
      return 'N';
  }
  return '?';
}

EdgeType edge_type_from_char(char c) {
  switch (c) {
    case 'U':
      return EdgeType::kU;
    case 'T':
      return EdgeType::kT;
    case 'N':
      return EdgeType::kN;
    default:
      throw GraphError(std::string("unknown edge type '") + c + "'");
  }
}

VertexIndex OrbitGraph::add_vertex(OrbitVertex vertex) {
  if (vertex.id.empty()) throw GraphError("vertex id must not be empty");
  if (ids_.contains(vertex.id)) {
    throw GraphError("duplicate vertex id '" + vertex.id + "'");
  }
  VertexIndex v = vertices_.size();
  ids_.emplace(vertex.id, v);
  vertices_.push_back(std::move(vertex));
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

EdgeIndex OrbitGraph::add_edge(OrbitEdge edge) {
  auto src = ids_.find(edge.src);
  auto dst = ids_.find(edge.dst);
  if (src == ids_.end() || dst == ids_.end()) {
    throw GraphError("edge " + edge.src + " -> " + edge.dst +
                     " has a dangling endpoint '" +
                     (src == ids_.end() ? edge.src : edge.dst) + "'");
  }
  if (edge.label >= cartan_.rank()) {
    throw GraphError("edge " + edge.src + " -> " + edge.dst + " has label " +
                     std::to_string(edge.label) + " outside the " +
                     std::to_string(cartan_.rank()) + " simple roots of " +
                     cartan_.label());
  }
  if (!triples_.emplace(src->second, dst->second, edge.label).second) {
    throw GraphError("duplicate edge " + edge.src + " -> " + edge.dst +
                     " with label " + std::to_string(edge.label));
  }
  EdgeIndex e = edges_.size();
  endpoints_.emplace_back(src->second, dst->second);
  out_[src->second].push_back(e);
  in_[dst->second].push_back(e);
  edges_.push_back(std::move(edge));
  return e;
}

bool OrbitGraph::contains(std::string_view id) const {
  return ids_.contains(std::string(id));
}

VertexIndex OrbitGraph::index_of(std::string_view id) const {
  auto it = ids_.find(std::string(id));
  if (it == ids_.end()) {
    throw GraphError("unknown vertex id '" + std::string(id) + "'");
  }
  return it->second;
}

std::vector<VertexIndex> OrbitGraph::sorted_vertices() const {
  std::vector<VertexIndex> order(vertices_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) {
    return std::tie(vertices_[a].dim, vertices_[a].id) <
           std::tie(vertices_[b].dim, vertices_[b].id);
  });
  return order;
}

std::vector<EdgeIndex> OrbitGraph::sorted_edges() const {
  std::vector<EdgeIndex> order(edges_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) {
    return std::tie(edges_[a].src, edges_[a].dst, edges_[a].label) <
           std::tie(edges_[b].src, edges_[b].dst, edges_[b].label);
  });
  return order;
}

bool OrbitGraph::has_all_ranks() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const OrbitVertex& v) { return v.rank.has_value(); });
}

bool CertificationReport::passed() const { return error_count() == 0; }

std::size_t CertificationReport::error_count() const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [](const Finding& f) {
        return f.severity == Severity::kError;
      }));
}

void CertificationReport::add(std::string check, Severity severity,
                              std::string message,
                              std::vector<std::string> witness) {
  findings.push_back(
      {std::move(check), severity, std::move(message), std::move(witness)});
}

void CertificationReport::append(const CertificationReport& other) {
  findings.insert(findings.end(), other.findings.begin(),
                  other.findings.end());
}

std::string edge_to_string(const OrbitGraph& g, EdgeIndex e) {
  const OrbitEdge& edge = g.edge(e);
  return edge.src + " -[" + std::to_string(edge.label) + "," +
         to_char(edge.type) + "]-> " + edge.dst;
}

std::vector<Component> components(const OrbitGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    parent[find(g.source(e))] = find(g.target(e));
  }
  std::map<std::size_t, Component> by_root;
  for (VertexIndex v : g.sorted_vertices()) {
    Component& c = by_root[find(v)];
    c.members.push_back(v);
    if (g.out_edges(v).empty()) c.maximal.push_back(v);
  }
  std::vector<Component> out;
  for (auto& [root, c] : by_root) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [&](const Component& a,
                                        const Component& b) {
    return g.vertex(a.members.front()).id < g.vertex(b.members.front()).id;
  });
  return out;
}

VertexIndex top_of(const OrbitGraph& g, VertexIndex v) {
  // Any maximal oriented path ends at the component's maximal vertex.
  VertexIndex cur = v;
  std::size_t steps = 0;
  while (!g.out_edges(cur).empty()) {
    cur = g.target(g.out_edges(cur).front());
    if (++steps > g.vertex_count()) {
      throw GraphError("cycle reached from vertex '" + g.vertex(v).id + "'");
    }
  }
  return cur;
}

namespace {

// Kahn's algorithm; nullopt if there is a cycle.
std::optional<std::vector<VertexIndex>> topological_order(
    const OrbitGraph& g) {
  std::vector<std::size_t> indegree(g.vertex_count(), 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) ++indegree[g.target(e)];
  std::deque<VertexIndex> ready;
  for (VertexIndex v : g.sorted_vertices()) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<VertexIndex> order;
  while (!ready.empty()) {
    VertexIndex v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (EdgeIndex e : g.out_edges(v)) {
      if (--indegree[g.target(e)] == 0) ready.push_back(g.target(e));
    }
  }
  if (order.size() != g.vertex_count()) return std::nullopt;
  return order;
}

}  // namespace

CertificationReport validate_structure(const OrbitGraph& g,
                                       const ValidationOptions& options) {
  CertificationReport report;
  report.layer = "structure";
  const CartanDatum& cartan = g.cartan();

  // (a) dimensions step by exactly one.
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    int step = g.vertex(g.target(e)).dim - g.vertex(g.source(e)).dim;
    if (step != 1) {
      report.add("dimension", Severity::kError,
                 "edge raises dimension by " + std::to_string(step),
                 {edge_to_string(g, e)});
    }
  }

  // (b) same-label edges into one target: 0, 1 or 2; two means type T.
  for (VertexIndex z = 0; z < g.vertex_count(); ++z) {
    std::map<std::size_t, std::vector<EdgeIndex>> by_label;
    for (EdgeIndex e : g.in_edges(z)) by_label[g.edge(e).label].push_back(e);
    for (const auto& [label, edges] : by_label) {
      std::vector<std::string> witness;
      for (EdgeIndex e : edges) witness.push_back(edge_to_string(g, e));
      if (edges.size() > 2) {
        report.add("trichotomy", Severity::kError,
                   "more than two edges with label " + std::to_string(label) +
                       " into " + g.vertex(z).id,
                   witness);
      } else if (edges.size() == 2) {
        for (EdgeIndex e : edges) {
          if (g.edge(e).type != EdgeType::kT) {
            report.add("trichotomy", Severity::kError,
                       "two edges with label " + std::to_string(label) +
                           " into " + g.vertex(z).id + " must both be T",
                       witness);
            break;
          }
        }
      } else if (g.edge(edges.front()).type == EdgeType::kT) {
        report.add("trichotomy",
                   options.allow_truncated ? Severity::kWarning
                                           : Severity::kError,
                   "type T edge into " + g.vertex(z).id +
                       " has a single source",
                   witness);
      }
    }
  }

  // (c) parallel edges: all T, or all U with pairwise orthogonal labels.
  std::map<std::pair<VertexIndex, VertexIndex>, std::vector<EdgeIndex>>
      parallel;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    parallel[{g.source(e), g.target(e)}].push_back(e);
  }
  for (const auto& [ends, edges] : parallel) {
    if (edges.size() < 2) continue;
    std::vector<std::string> witness;
    for (EdgeIndex e : edges) witness.push_back(edge_to_string(g, e));
    bool all_t = std::all_of(edges.begin(), edges.end(), [&](EdgeIndex e) {
      return g.edge(e).type == EdgeType::kT;
    });
    bool all_u = std::all_of(edges.begin(), edges.end(), [&](EdgeIndex e) {
      return g.edge(e).type == EdgeType::kU;
    });
    if (all_t) continue;
    if (!all_u) {
      report.add("parallel", Severity::kError,
                 "edges sharing both endpoints must be all T or all U",
                 witness);
      continue;
    }
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        if (!cartan.orthogonal(g.edge(edges[a]).label,
                               g.edge(edges[b]).label)) {
          report.add("parallel", Severity::kError,
                     "parallel U edges with non-orthogonal labels",
                     {edge_to_string(g, edges[a]),
                      edge_to_string(g, edges[b])});
        }
      }
    }
  }

  // (d) at most one outgoing edge per label, and no vertex both raised by a
  // label and the target of an edge with that label.
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::map<std::size_t, std::vector<EdgeIndex>> out_by_label;
    for (EdgeIndex e : g.out_edges(v)) {
      out_by_label[g.edge(e).label].push_back(e);
    }
    std::set<std::size_t> in_labels;
    for (EdgeIndex e : g.in_edges(v)) in_labels.insert(g.edge(e).label);
    for (const auto& [label, edges] : out_by_label) {
      if (edges.size() > 1) {
        std::vector<std::string> witness;
        for (EdgeIndex e : edges) witness.push_back(edge_to_string(g, e));
        report.add("raise", Severity::kError,
                   g.vertex(v).id + " is raised by label " +
                       std::to_string(label) + " to several vertices",
                   witness);
      }
      if (in_labels.contains(label)) {
        report.add("raise", Severity::kError,
                   g.vertex(v).id + " both raised by and reached by label " +
                       std::to_string(label),
                   {g.vertex(v).id});
      }
    }
  }

  // (e) acyclic, unique maximal vertex per component.
  if (!topological_order(g)) {
    report.add("acyclic", Severity::kError, "graph contains a cycle");
  }
  for (const Component& c : components(g)) {
    if (c.maximal.size() != 1) {
      std::vector<std::string> witness;
      for (VertexIndex v : c.maximal) witness.push_back(g.vertex(v).id);
      report.add("maximal", Severity::kError,
                 "component containing " + g.vertex(c.members.front()).id +
                     " has " + std::to_string(c.maximal.size()) +
                     " maximal vertices",
                 witness);
    } else if (g.rank_of_top() && g.vertex(c.maximal.front()).rank &&
               *g.vertex(c.maximal.front()).rank != *g.rank_of_top()) {
      report.add("rank", Severity::kError,
                 "top vertex rank differs from rank_of_top",
                 {g.vertex(c.maximal.front()).id});
    }
  }

  // (f) U keeps the rank, T and N raise it by one.
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& src = g.vertex(g.source(e));
    const auto& dst = g.vertex(g.target(e));
    if (!src.rank || !dst.rank) continue;
    int expected = *src.rank + (raises_rank(g.edge(e).type) ? 1 : 0);
    if (*dst.rank != expected) {
      report.add("rank", Severity::kError,
                 "rank " + std::to_string(*src.rank) + " -> " +
                     std::to_string(*dst.rank) + " across a " +
                     to_char(g.edge(e).type) + " edge",
                 {edge_to_string(g, e)});
    }
  }
  return report;
}

std::vector<std::size_t> delta_of(const OrbitGraph& g, std::string_view id) {
  VertexIndex v = g.index_of(id);
  std::vector<bool> incident(g.cartan().rank(), false);
  for (EdgeIndex e : g.out_edges(v)) incident[g.edge(e).label] = true;
  for (EdgeIndex e : g.in_edges(v)) incident[g.edge(e).label] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < incident.size(); ++i) {
    if (!incident[i]) out.push_back(i);
  }
  return out;
}

EdgeStatus edge_status(const OrbitGraph& g, std::string_view id,
                       std::size_t label) {
  VertexIndex v = g.index_of(id);
  if (label >= g.cartan().rank()) throw GraphError("label out of range");
  EdgeStatus status;
  for (EdgeIndex e : g.out_edges(v)) {
    if (g.edge(e).label != label) continue;
    status.kind = EdgeStatus::Kind::kRaises;
    status.type = g.edge(e).type;
    status.others.push_back(g.edge(e).dst);
    return status;
  }
  for (EdgeIndex e : g.in_edges(v)) {
    if (g.edge(e).label != label) continue;
    status.kind = EdgeStatus::Kind::kLoweredBy;
    status.type = g.edge(e).type;
    status.others.push_back(g.edge(e).src);
  }
  std::sort(status.others.begin(), status.others.end());
  return status;
}

std::string monoid_raise(const OrbitGraph& g, std::string_view id,
                         std::size_t label) {
  EdgeStatus status = edge_status(g, id, label);
  if (status.kind == EdgeStatus::Kind::kRaises) return status.others.front();
  return std::string(id);
}

std::set<VertexIndex> upper_set(const OrbitGraph& g, VertexIndex v) {
  std::set<VertexIndex> seen{v};
  std::deque<VertexIndex> queue{v};
  while (!queue.empty()) {
    VertexIndex x = queue.front();
    queue.pop_front();
    for (EdgeIndex e : g.out_edges(x)) {
      if (seen.insert(g.target(e)).second) queue.push_back(g.target(e));
    }
  }
  return seen;
}

OrbitGraph infer_ranks(const OrbitGraph& g,
                       const std::map<std::string, int>& rank_of_top) {
  auto order = topological_order(g);
  if (!order) throw GraphError("cannot infer ranks on a cyclic graph");
  std::vector<std::optional<int>> rank(g.vertex_count());
  // One witness path (as vertex ids) from each vertex to its top.
  std::vector<std::vector<std::string>> path(g.vertex_count());
  auto render = [](const std::vector<std::string>& p) {
    std::string s;
    for (const auto& id : p) s += (s.empty() ? "" : " > ") + id;
    return s;
  };
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    VertexIndex v = *it;
    const std::string& id = g.vertex(v).id;
    if (g.out_edges(v).empty()) {
      auto given = rank_of_top.find(id);
      if (given == rank_of_top.end()) {
        throw CertificationError("no rank supplied for top vertex '" + id + "'",
                                 {id});
      }
      rank[v] = given->second;
      path[v] = {id};
    } else {
      for (EdgeIndex e : g.out_edges(v)) {
        VertexIndex w = g.target(e);
        int candidate = *rank[w] - (raises_rank(g.edge(e).type) ? 1 : 0);
        std::vector<std::string> through{id};
        through.insert(through.end(), path[w].begin(), path[w].end());
        if (!rank[v]) {
          rank[v] = candidate;
          path[v] = std::move(through);
        } else if (*rank[v] != candidate) {
          throw CertificationError(
              "inconsistent rank drops from '" + id + "'",
              {render(path[v]), render(through)});
        }
      }
    }
    const auto& given = g.vertex(v).rank;
    if (given && *given != *rank[v]) {
      throw CertificationError("vertex '" + id + "' has rank " +
                                   std::to_string(*given) + " but paths give " +
                                   std::to_string(*rank[v]),
                               {render(path[v])});
    }
  }
  OrbitGraph out = g;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out.set_rank(v, rank[v]);
  return out;
}

OrbitGraph infer_ranks(const OrbitGraph& g, int rank_of_top) {
  std::map<std::string, int> tops;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.out_edges(v).empty()) tops[g.vertex(v).id] = rank_of_top;
  }
  OrbitGraph out = infer_ranks(g, tops);
  out.set_rank_of_top(rank_of_top);
  return out;
}

std::optional<OrbitGraph> with_ranks(const OrbitGraph& g) {
  if (g.has_all_ranks()) return g;
  if (g.rank_of_top()) return infer_ranks(g, *g.rank_of_top());
  std::map<std::string, int> tops;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!g.out_edges(v).empty()) continue;
    if (!g.vertex(v).rank) return std::nullopt;
    tops[g.vertex(v).id] = *g.vertex(v).rank;
  }
  return infer_ranks(g, tops);
}

}  // namespace orbitweave
