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

#include "orbitweave/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace orbitweave {
namespace {

using Signature =
    std::tuple<int, std::optional<int>,
               std::vector<std::pair<std::size_t, char>>,
               std::vector<std::pair<std::size_t, char>>>;

int min_dim(const OrbitGraph& g) {
  int m = 0;
  bool first = true;
  for (const auto& v : g.vertices()) {
    if (first || v.dim < m) m = v.dim;
    first = false;
  }
  return m;
}

Signature signature(const OrbitGraph& g, VertexIndex v,
                    const std::vector<std::size_t>& labels, int offset,
                    bool use_rank) {
  std::vector<std::pair<std::size_t, char>> out, in;
  for (EdgeIndex e : g.out_edges(v)) {
    out.emplace_back(labels[g.edge(e).label], to_char(g.edge(e).type));
  }
  for (EdgeIndex e : g.in_edges(v)) {
    in.emplace_back(labels[g.edge(e).label], to_char(g.edge(e).type));
  }
  std::sort(out.begin(), out.end());
  std::sort(in.begin(), in.end());
  return {g.vertex(v).dim - offset,
          use_rank ? g.vertex(v).rank : std::nullopt, out, in};
}

}  // namespace

std::optional<GraphIsomorphism> find_isomorphism(
    const OrbitGraph& a, const OrbitGraph& b,
    const std::vector<std::size_t>& label_map) {
  std::size_t n = a.cartan().rank();
  if (n != b.cartan().rank() || a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  std::vector<std::size_t> labels = label_map;
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), 0);
  }
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  bool use_rank = a.has_all_ranks() && b.has_all_ranks();
  int offset_a = min_dim(a), offset_b = min_dim(b);

  std::vector<Signature> sig_a(a.vertex_count()), sig_b(b.vertex_count());
  for (VertexIndex v = 0; v < a.vertex_count(); ++v) {
    sig_a[v] = signature(a, v, labels, offset_a, use_rank);
  }
  for (VertexIndex v = 0; v < b.vertex_count(); ++v) {
    sig_b[v] = signature(b, v, identity, offset_b, use_rank);
  }

  // b-edges keyed by (src, dst, label) -> type.
  std::map<std::tuple<VertexIndex, VertexIndex, std::size_t>, EdgeType>
      b_edges;
  for (EdgeIndex e = 0; e < b.edge_count(); ++e) {
    b_edges[{b.source(e), b.target(e), b.edge(e).label}] = b.edge(e).type;
  }

  std::vector<VertexIndex> order = a.sorted_vertices();
  std::vector<std::optional<VertexIndex>> image(a.vertex_count());
  std::vector<bool> used(b.vertex_count(), false);

  auto consistent = [&](VertexIndex v) {
    auto check = [&](EdgeIndex e) {
      VertexIndex s = a.source(e), t = a.target(e);
      if (!image[s] || !image[t]) return true;
      auto it = b_edges.find({*image[s], *image[t], labels[a.edge(e).label]});
      return it != b_edges.end() && it->second == a.edge(e).type;
    };
    for (EdgeIndex e : a.out_edges(v)) {
      if (!check(e)) return false;
    }
    for (EdgeIndex e : a.in_edges(v)) {
      if (!check(e)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == order.size()) return true;
    VertexIndex v = order[k];
    for (VertexIndex c = 0; c < b.vertex_count(); ++c) {
      if (used[c] || sig_a[v] != sig_b[c]) continue;
      image[v] = c;
      used[c] = true;
      if (consistent(v) && self(self, k + 1)) return true;
      used[c] = false;
      image[v].reset();
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  GraphIsomorphism iso;
  iso.label_map = labels;
  for (VertexIndex v = 0; v < a.vertex_count(); ++v) {
    iso.vertex_map[a.vertex(v).id] = b.vertex(*image[v]).id;
  }
  return iso;
}

std::optional<GraphIsomorphism> find_isomorphism_up_to_diagram(
    const OrbitGraph& a, const OrbitGraph& b) {
  if (!(a.cartan() == b.cartan())) return std::nullopt;
  for (const auto& automorphism : a.cartan().diagram_automorphisms()) {
    if (auto iso = find_isomorphism(a, b, automorphism)) return iso;
  }
  return std::nullopt;
}

}  // namespace orbitweave
