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

#include "orbitweave/path_analysis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>

#include "orbitweave/errors.hpp"

namespace orbitweave {

std::string PathSummary::to_string() const {
  std::string out = vertices.empty() ? "" : vertices.front();
  for (std::size_t k = 0; k < labels.size(); ++k) {
    out += " -(" + std::to_string(labels[k]) + "," + to_char(types[k]) +
           ")-> " + vertices[k + 1];
  }
  return out;
}

void for_each_path_from(const OrbitGraph& g, const WeylGroup& weyl,
                        VertexIndex source,
                        const std::function<bool(const PathSummary&)>& visit) {
  PathSummary path;
  path.vertices.push_back(g.vertex(source).id);
  path.w = weyl.identity();
  auto walk = [&](auto&& self, VertexIndex v) -> void {
    if (!visit(path)) return;
    for (EdgeIndex e : g.out_edges(v)) {
      const OrbitEdge& edge = g.edge(e);
      WeylElement before = path.w;
      path.vertices.push_back(edge.dst);
      path.labels.push_back(edge.label);
      path.types.push_back(edge.type);
      path.w = weyl.multiply(weyl.simple_reflection(edge.label), before);
      std::size_t& counter = edge.type == EdgeType::kU   ? path.count_u
                             : edge.type == EdgeType::kT ? path.count_t
                                                         : path.count_n;
      ++counter;
      self(self, g.target(e));
      --counter;
      path.w = before;
      path.types.pop_back();
      path.labels.pop_back();
      path.vertices.pop_back();
    }
  };
  walk(walk, source);
}

namespace {

std::vector<bool> can_reach(const OrbitGraph& g, VertexIndex target) {
  std::vector<bool> reach(g.vertex_count(), false);
  reach[target] = true;
  std::deque<VertexIndex> queue{target};
  while (!queue.empty()) {
    VertexIndex v = queue.front();
    queue.pop_front();
    for (EdgeIndex e : g.in_edges(v)) {
      if (!reach[g.source(e)]) {
        reach[g.source(e)] = true;
        queue.push_back(g.source(e));
      }
    }
  }
  return reach;
}

std::vector<PathSummary> paths_between(const OrbitGraph& g,
                                       const WeylGroup& weyl,
                                       VertexIndex source, VertexIndex target) {
  std::vector<bool> reach = can_reach(g, target);
  std::vector<PathSummary> out;
  const std::string& target_id = g.vertex(target).id;
  for_each_path_from(g, weyl, source, [&](const PathSummary& p) {
    if (!reach[g.index_of(p.vertices.back())]) return false;
    if (p.vertices.back() == target_id) out.push_back(p);
    return true;
  });
  return out;
}

std::vector<WeylElement> keys_of(const WeylSet& set) {
  std::vector<WeylElement> out;
  for (const auto& [w, exponent] : set) out.push_back(w);
  return out;
}

}  // namespace

std::vector<PathSummary> enumerate_paths(const OrbitGraph& g,
                                         const WeylGroup& weyl,
                                         std::string_view source,
                                         std::string_view target) {
  return paths_between(g, weyl, g.index_of(source), g.index_of(target));
}

WeylSet weyl_set(const OrbitGraph& g, const WeylGroup& weyl,
                 std::string_view vertex) {
  VertexIndex y = g.index_of(vertex);
  VertexIndex top = top_of(g, y);
  WeylSet out;
  std::map<WeylElement, std::string> first_path;
  for (const PathSummary& p : paths_between(g, weyl, y, top)) {
    int exponent = static_cast<int>(p.count_n);
    auto [it, inserted] = out.emplace(p.w, exponent);
    if (inserted) {
      first_path[p.w] = p.to_string();
    } else if (it->second != exponent) {
      throw CertificationError(
          "paths from '" + std::string(vertex) + "' with equal w(gamma) = " +
              weyl.word_string(p.w) + " have different numbers of double edges",
          {first_path[p.w], p.to_string()});
    }
  }
  return out;
}

bool is_multiplicity_free(const OrbitGraph& g, std::string_view vertex) {
  for (VertexIndex v : upper_set(g, g.index_of(vertex))) {
    for (EdgeIndex e : g.out_edges(v)) {
      if (is_double(g.edge(e).type)) return false;
    }
  }
  return true;
}

CertificationReport certify_paths(const OrbitGraph& g, const WeylGroup& weyl) {
  CertificationReport report;
  report.layer = "paths";
  std::optional<OrbitGraph> ranked;
  try {
    ranked = with_ranks(g);
  } catch (const CertificationError& e) {
    report.add("rank", Severity::kError, e.what(), e.witness());
  }
  if (!ranked && report.passed()) {
    report.add("rank", Severity::kWarning,
               "no ranks available; checking only that l_T + l_N depends on "
               "the endpoints");
  }

  for (VertexIndex source = 0; source < g.vertex_count(); ++source) {
    // target -> (l_T + l_N, witness); (target, w) -> (l_N, witness).
    std::map<std::string, std::pair<std::size_t, std::string>> rank_drop;
    std::map<std::pair<std::string, WeylElement>,
             std::pair<std::size_t, std::string>>
        doubles;
    std::set<std::string> reported;
    for_each_path_from(g, weyl, source, [&](const PathSummary& p) {
      if (weyl.length(p.w) != p.length()) {
        report.add("reduced", Severity::kError,
                   "label word is not reduced: l(w) = " +
                       std::to_string(weyl.length(p.w)) + " but the path has " +
                       std::to_string(p.length()) + " edges",
                   {p.to_string()});
        return false;  // every extension is non-reduced as well
      }
      const std::string& target = p.vertices.back();
      std::size_t drop = p.count_t + p.count_n;
      if (ranked) {
        int expected = *ranked->vertex(ranked->index_of(target)).rank -
                       *ranked->vertex(source).rank;
        if (static_cast<int>(drop) != expected &&
            reported.insert("rank:" + target).second) {
          report.add("rank", Severity::kError,
                     "l_T + l_N = " + std::to_string(drop) +
                         " but the rank difference is " +
                         std::to_string(expected),
                     {p.to_string()});
        }
      }
      auto [it, fresh] = rank_drop.emplace(
          target, std::make_pair(drop, p.to_string()));
      if (!fresh && it->second.first != drop &&
          reported.insert("drop:" + target).second) {
        report.add("rank", Severity::kError,
                   "l_T + l_N differs between paths with the same endpoints",
                   {it->second.second, p.to_string()});
      }
      auto [jt, fresh_w] = doubles.emplace(
          std::make_pair(target, p.w), std::make_pair(p.count_n, p.to_string()));
      if (!fresh_w && jt->second.first != p.count_n &&
          reported.insert("deg:" + target + weyl.word_string(p.w)).second) {
        report.add("degree", Severity::kError,
                   "l_N differs between paths with equal endpoints and w = " +
                       weyl.word_string(p.w),
                   {jt->second.second, p.to_string()});
      }
      return true;
    });
  }
  return report;
}

Codim1Result codim1_connected(const WeylGroup& weyl,
                              const std::vector<WeylElement>& set,
                              const std::vector<std::size_t>& delta) {
  Codim1Result result;
  if (set.empty()) {
    result.connected = true;
    return result;
  }
  std::size_t len = weyl.length(set.front());
  for (WeylElement u : set) {
    if (weyl.length(u) != len) {
      throw Error("codim1_connected: elements of different lengths");
    }
  }
  std::vector<WeylElement> dominants;
  std::set<WeylElement> reps;
  for (WeylElement w : weyl.min_coset_reps(delta)) reps.insert(w);
  for (WeylElement w : weyl.elements()) {
    if (weyl.length(w) == len + 1 && reps.contains(weyl.inverse(w))) {
      dominants.push_back(w);
    }
  }
  std::vector<std::size_t> parent(set.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t classes = set.size();
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (find(a) == find(b)) continue;
      for (WeylElement w : dominants) {
        if (weyl.bruhat_leq(set[a], w) && weyl.bruhat_leq(set[b], w)) {
          parent[find(a)] = find(b);
          --classes;
          result.links.push_back({set[a], set[b], w});
          break;
        }
      }
    }
  }
  result.connected = classes == 1;
  return result;
}

ExpansionReport schubert_expansion(const OrbitGraph& g, const WeylGroup& weyl,
                                   std::string_view vertex) {
  ExpansionReport report;
  report.vertex = std::string(vertex);
  report.weyl_set = weyl_set(g, weyl, vertex);
  report.multiplicity_free = is_multiplicity_free(g, vertex);
  for (const auto& [w, exponent] : report.weyl_set) {
    report.terms[weyl.multiply(weyl.longest(), w)] = exponent;
  }
  VertexIndex top = top_of(g, g.index_of(vertex));
  report.v0 = codim1_connected(weyl, keys_of(report.weyl_set),
                               delta_of(g, g.vertex(top).id));
  return report;
}

namespace {

// (s_a s_b)^{(m)}: m alternating letters, the rightmost being a.
Word alternating(std::size_t a, std::size_t b, int m) {
  Word word(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    word[static_cast<std::size_t>(m - 1 - k)] = (k % 2 == 0) ? a : b;
  }
  return word;
}

}  // namespace

std::vector<NeighborFactorization> neighbor_factorizations(
    const WeylGroup& weyl, WeylElement u, WeylElement v, bool first_only) {
  std::vector<NeighborFactorization> out;
  std::size_t len = weyl.length(u);
  if (u == v || weyl.length(v) != len) return out;
  std::size_t n = weyl.rank();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      int order = weyl.braid_order(a, b);
      for (int m = 1; m < order; ++m) {
        if (static_cast<std::size_t>(m) > len) break;
        WeylElement p = weyl.from_word(alternating(a, b, m));
        WeylElement q = weyl.from_word(alternating(b, a, m));
        for (WeylElement x : weyl.elements()) {
          std::size_t lx = weyl.length(x);
          if (lx + static_cast<std::size_t>(m) > len) break;  // sorted by length
          WeylElement xp = weyl.multiply(x, p);
          if (weyl.length(xp) != lx + static_cast<std::size_t>(m)) continue;
          WeylElement y = weyl.multiply(weyl.inverse(xp), u);
          if (weyl.length(y) + lx + static_cast<std::size_t>(m) != len) continue;
          if (weyl.multiply(weyl.multiply(x, q), y) != v) continue;
          out.push_back({x, y, a, b, m});
          if (first_only) return out;
        }
      }
    }
  }
  return out;
}

bool is_neighbor(const WeylGroup& weyl, WeylElement u, WeylElement v) {
  return !neighbor_factorizations(weyl, u, v, true).empty();
}

std::vector<std::vector<std::size_t>> neighbor_graph(
    const WeylGroup& weyl, const std::vector<WeylElement>& set) {
  std::vector<std::vector<std::size_t>> adjacency(set.size());
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (is_neighbor(weyl, set[a], set[b])) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
      }
    }
  }
  return adjacency;
}

namespace {

bool connected(const std::vector<std::vector<std::size_t>>& adjacency) {
  if (adjacency.empty()) return true;
  std::vector<bool> seen(adjacency.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adjacency[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        queue.push_back(y);
      }
    }
  }
  return count == adjacency.size();
}

}  // namespace

bool neighbor_connectivity(const OrbitGraph& g, const WeylGroup& weyl,
                           std::string_view vertex) {
  return connected(neighbor_graph(weyl, keys_of(weyl_set(g, weyl, vertex))));
}

CertificationReport constancy_check(const OrbitGraph& g,
                                    const WeylGroup& weyl) {
  CertificationReport report;
  report.layer = "constancy";
  bool simply_laced = g.cartan().simply_laced();
  for (VertexIndex source : g.sorted_vertices()) {
    std::map<std::string, std::pair<std::size_t, std::string>> seen;
    std::set<std::string> reported;
    for_each_path_from(g, weyl, source, [&](const PathSummary& p) {
      const std::string& target = p.vertices.back();
      auto [it, fresh] =
          seen.emplace(target, std::make_pair(p.count_n, p.to_string()));
      if (!fresh && it->second.first != p.count_n &&
          reported.insert(target).second) {
        report.add("constancy", Severity::kError,
                   "paths " + g.vertex(source).id + " -> " + target +
                       " differ in l_N (" + std::to_string(it->second.first) +
                       " vs " + std::to_string(p.count_n) + ")",
                   {it->second.second, p.to_string()});
        if (simply_laced) {
          report.add("certifiable", Severity::kError,
                     "simply-laced type " + g.cartan().label() +
                         " with non-constant l_N: graph is not certifiable",
                     {it->second.second, p.to_string()});
        }
      }
      return true;
    });
  }
  return report;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kFails:
      return "fails";
    case Verdict::kNotApplicable:
      return "not_applicable";
  }
  return "?";
}

PathVerdict simple_then_double_exists(const OrbitGraph& g,
                                      const WeylGroup& weyl,
                                      std::string_view vertex) {
  PathVerdict result;
  VertexIndex y = g.index_of(vertex);
  if (!g.cartan().simply_laced()) return result;
  VertexIndex top = top_of(g, y);
  std::vector<bool> reach = can_reach(g, top);
  result.verdict = Verdict::kFails;
  const std::string& top_id = g.vertex(top).id;
  for_each_path_from(g, weyl, y, [&](const PathSummary& p) {
    if (result.witness) return false;
    if (!reach[g.index_of(p.vertices.back())]) return false;
    // Once a double edge appears, only double edges may follow.
    for (std::size_t k = 1; k < p.types.size(); ++k) {
      if (is_double(p.types[k - 1]) && !is_double(p.types[k])) return false;
    }
    if (p.vertices.back() == top_id) {
      result.verdict = Verdict::kHolds;
      result.witness = p;
      return false;
    }
    return true;
  });
  return result;
}

Verdict color_simplicity(const std::vector<Weight>& weights,
                         const CartanDatum& datum) {
  if (!datum.simply_laced()) return Verdict::kNotApplicable;
  for (const Weight& weight : weights) {
    for (std::size_t i = 0; i < datum.rank(); ++i) {
      if (pairing(datum, weight, i) > 1) return Verdict::kFails;
    }
  }
  return Verdict::kHolds;
}

CertificationReport multiplicity_free_monotone(const OrbitGraph& g) {
  CertificationReport report;
  report.layer = "multiplicity_free_monotone";
  std::vector<bool> free(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    free[v] = is_multiplicity_free(g, g.vertex(v).id);
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!free[v]) continue;
    for (VertexIndex w : upper_set(g, v)) {
      if (!free[w]) {
        report.add("monotone", Severity::kError,
                   g.vertex(v).id + " is multiplicity-free but " +
                       g.vertex(w).id + " above it is not",
                   {g.vertex(v).id, g.vertex(w).id});
      }
    }
  }
  return report;
}

CertificationReport max_rank_disjoint(const OrbitGraph& g,
                                      const WeylGroup& weyl) {
  CertificationReport report;
  report.layer = "max_rank_disjoint";
  std::optional<OrbitGraph> ranked = with_ranks(g);
  if (!ranked) {
    report.add("rank", Severity::kError, "ranks are not available");
    return report;
  }
  for (const Component& c : components(*ranked)) {
    if (c.maximal.size() != 1) continue;
    int top_rank = *ranked->vertex(c.maximal.front()).rank;
    std::map<WeylElement, std::string> owner;
    for (VertexIndex v : c.members) {
      if (*ranked->vertex(v).rank != top_rank) continue;
      const std::string& id = ranked->vertex(v).id;
      for (const auto& [w, exponent] : weyl_set(*ranked, weyl, id)) {
        auto [it, fresh] = owner.emplace(w, id);
        if (!fresh) {
          report.add("disjoint", Severity::kError,
                     weyl.word_string(w) + " lies in W(" + it->second +
                         ") and W(" + id + ")",
                     {it->second, id});
        }
      }
    }
  }
  return report;
}

CertificationReport connectivity_checks(const OrbitGraph& g,
                                        const WeylGroup& weyl) {
  CertificationReport report;
  report.layer = "connectivity";
  for (VertexIndex v : g.sorted_vertices()) {
    const std::string& id = g.vertex(v).id;
    std::vector<WeylElement> set = keys_of(weyl_set(g, weyl, id));
    auto delta = delta_of(g, g.vertex(top_of(g, v)).id);
    if (!codim1_connected(weyl, set, delta).connected) {
      report.add("codim1", Severity::kError,
                 "W(" + id + ") is not connected in codimension one", {id});
    }
    auto adjacency = neighbor_graph(weyl, set);
    if (!connected(adjacency)) {
      report.add("neighbors", Severity::kError,
                 "W(" + id + ") is not connected under the neighbor relation",
                 {id});
    }
    // Every neighbor pair has a common upper bound one step up.
    for (std::size_t a = 0; a < set.size(); ++a) {
      for (std::size_t b : adjacency[a]) {
        if (b < a) continue;
        if (!codim1_connected(weyl, {set[a], set[b]}, delta).connected) {
          report.add("dominant", Severity::kError,
                     "neighbors " + weyl.word_string(set[a]) + " and " +
                         weyl.word_string(set[b]) +
                         " have no common upper bound of length + 1",
                     {id});
        }
      }
    }
  }
  return report;
}

}  // namespace orbitweave
