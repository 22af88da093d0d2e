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

#include "orbitweave/knop_action.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "orbitweave/errors.hpp"
#include "orbitweave/path_analysis.hpp"

namespace orbitweave {

VertexIndex ActionTable::act_word(const Word& word, VertexIndex v) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(*it, v);
  return v;
}

std::vector<VertexIndex> ActionTable::orbit(VertexIndex v) const {
  std::set<VertexIndex> seen{v};
  std::deque<VertexIndex> queue{v};
  while (!queue.empty()) {
    VertexIndex x = queue.front();
    queue.pop_front();
    for (const auto& gen : generators_) {
      if (seen.insert(gen[x]).second) queue.push_back(gen[x]);
    }
  }
  return {seen.begin(), seen.end()};
}

ActionTable build_action(const OrbitGraph& g) {
  std::size_t n = g.cartan().rank();
  std::vector<std::string> ids;
  for (const OrbitVertex& v : g.vertices()) ids.push_back(v.id);
  std::vector<std::vector<VertexIndex>> gens(n);
  for (auto& perm : gens) {
    perm.resize(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
  }
  auto swap = [&](std::size_t label, VertexIndex a, VertexIndex b) {
    auto& perm = gens[label];
    if (perm[a] != a || perm[b] != b) {
      throw CertificationError(
          "label " + std::to_string(label) + " moves " + ids[a] + " or " +
              ids[b] + " twice",
          {ids[a], ids[b]});
    }
    perm[a] = b;
    perm[b] = a;
  };
  for (VertexIndex z = 0; z < g.vertex_count(); ++z) {
    std::map<std::size_t, std::vector<EdgeIndex>> by_label;
    for (EdgeIndex e : g.in_edges(z)) by_label[g.edge(e).label].push_back(e);
    for (const auto& [label, edges] : by_label) {
      if (edges.size() == 1) {
        const OrbitEdge& edge = g.edge(edges.front());
        if (edge.type == EdgeType::kU) {
          swap(label, g.source(edges.front()), z);
        } else if (edge.type == EdgeType::kT) {
          throw CertificationError(
              "type T edge without a second source: " +
                  edge_to_string(g, edges.front()),
              {edge_to_string(g, edges.front())});
        }
      } else if (edges.size() == 2 && g.edge(edges[0]).type == EdgeType::kT &&
                 g.edge(edges[1]).type == EdgeType::kT) {
        swap(label, g.source(edges[0]), g.source(edges[1]));
      } else {
        std::vector<std::string> witness;
        for (EdgeIndex e : edges) witness.push_back(edge_to_string(g, e));
        throw CertificationError("ambiguous label " + std::to_string(label) +
                                     " trichotomy at " + ids[z],
                                 witness);
      }
    }
  }
  return ActionTable(std::move(ids), std::move(gens));
}

namespace {

int braid_order_of(const CartanDatum& datum, std::size_t i, std::size_t j) {
  switch (datum.entry(i, j) * datum.entry(j, i)) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    default:
      return 6;
  }
}

}  // namespace

CertificationReport certify_action(const ActionTable& table,
                                   const CartanDatum& datum) {
  CertificationReport report;
  report.layer = "action";
  std::size_t n = table.rank();
  for (std::size_t a = 0; a < n; ++a) {
    for (VertexIndex v = 0; v < table.vertex_count(); ++v) {
      if (table.apply(a, table.apply(a, v)) != v) {
        report.add("involution", Severity::kError,
                   "s_" + std::to_string(a) + " is not an involution at " +
                       table.id(v),
                   {table.id(v)});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      int m = braid_order_of(datum, a, b);
      for (VertexIndex v = 0; v < table.vertex_count(); ++v) {
        std::vector<std::string> trail{table.id(v)};
        VertexIndex x = v;
        for (int k = 0; k < m; ++k) {
          x = table.apply(b, x);
          trail.push_back(table.id(x));
          x = table.apply(a, x);
          trail.push_back(table.id(x));
        }
        if (x != v) {
          report.add("braid", Severity::kError,
                     "(s_" + std::to_string(a) + " s_" + std::to_string(b) +
                         ")^" + std::to_string(m) + " moves " + table.id(v),
                     trail);
          break;  // one witness per pair
        }
      }
    }
  }
  return report;
}

std::vector<VertexIndex> max_rank_orbit(const ActionTable& table,
                                        const OrbitGraph& g) {
  std::optional<OrbitGraph> ranked = with_ranks(g);
  if (!ranked) {
    throw CertificationError("max_rank_orbit needs ranks", {});
  }
  std::set<VertexIndex> out;
  for (const Component& c : components(*ranked)) {
    if (c.maximal.size() != 1) {
      throw CertificationError("component without a unique top", {});
    }
    VertexIndex top = c.maximal.front();
    int top_rank = *ranked->vertex(top).rank;
    std::vector<VertexIndex> orbit = table.orbit(top);
    std::vector<VertexIndex> expected;
    for (VertexIndex v : c.members) {
      if (*ranked->vertex(v).rank == top_rank) expected.push_back(v);
    }
    std::sort(expected.begin(), expected.end());
    if (orbit != expected) {
      std::vector<std::string> witness;
      std::vector<VertexIndex> diff;
      std::set_symmetric_difference(orbit.begin(), orbit.end(),
                                    expected.begin(), expected.end(),
                                    std::back_inserter(diff));
      for (VertexIndex v : diff) witness.push_back(g.vertex(v).id);
      throw CertificationError("W-orbit of " + g.vertex(top).id +
                                   " differs from the vertices of top rank",
                               witness);
    }
    out.insert(orbit.begin(), orbit.end());
  }
  return {out.begin(), out.end()};
}

namespace {

VertexIndex resolve_top(const OrbitGraph& g,
                        const std::optional<std::string>& top) {
  if (top) return g.index_of(*top);
  std::vector<Component> comps = components(g);
  if (comps.size() != 1 || comps.front().maximal.size() != 1) {
    throw GraphError("graph has no unique top vertex; name one explicitly");
  }
  return comps.front().maximal.front();
}

}  // namespace

StabilizerReport stabilizer(const ActionTable& table, const OrbitGraph& g,
                            const WeylGroup& weyl,
                            std::optional<std::string> top) {
  StabilizerReport report;
  VertexIndex x = resolve_top(g, top);
  report.top = g.vertex(x).id;
  for (WeylElement w : weyl.elements()) {
    if (table.act(weyl, w, x) == x) report.stabilizer.push_back(w);
  }
  report.delta = delta_of(g, report.top);
  report.parabolic = weyl.parabolic_subgroup(report.delta);

  std::set<std::size_t> delta(report.delta.begin(), report.delta.end());
  for (WeylElement w : report.stabilizer) {
    bool keeps = true;
    for (std::size_t i : report.delta) {
      RootId image = weyl.apply(w, weyl.simple_root(i));
      bool simple_in_delta = false;
      for (std::size_t j : report.delta) {
        if (image == weyl.simple_root(j)) simple_in_delta = true;
      }
      keeps = keeps && simple_in_delta;
    }
    if (keeps) report.complement.push_back(w);
  }

  CertificationReport& dec = report.decomposition;
  dec.layer = "stabilizer";
  std::set<WeylElement> h(report.stabilizer.begin(), report.stabilizer.end());
  std::set<WeylElement> p(report.parabolic.begin(), report.parabolic.end());
  std::set<WeylElement> c(report.complement.begin(), report.complement.end());
  if (!weyl.is_subgroup(report.stabilizer)) {
    dec.add("subgroup", Severity::kError, "W_(X) is not a subgroup");
  }
  for (WeylElement w : report.parabolic) {
    if (!h.contains(w)) {
      dec.add("parabolic", Severity::kError,
              weyl.word_string(w) + " lies in W_Delta(X) but not in W_(X)",
              {weyl.word_string(w)});
      break;
    }
  }
  for (WeylElement w : report.stabilizer) {
    for (WeylElement q : report.parabolic) {
      WeylElement conj = weyl.multiply(weyl.multiply(w, q), weyl.inverse(w));
      if (!p.contains(conj)) {
        dec.add("normal", Severity::kError,
                "W_Delta(X) is not normalized by " + weyl.word_string(w),
                {weyl.word_string(w), weyl.word_string(q)});
        break;
      }
    }
  }
  for (WeylElement w : report.complement) {
    if (w != weyl.identity() && p.contains(w)) {
      dec.add("intersection", Severity::kError,
              weyl.word_string(w) + " lies in both W_Delta(X) and W_X",
              {weyl.word_string(w)});
    }
  }
  std::set<WeylElement> products;
  for (WeylElement q : report.parabolic) {
    for (WeylElement w : report.complement) products.insert(weyl.multiply(q, w));
  }
  if (products != h) {
    dec.add("product", Severity::kError,
            "W_Delta(X) W_X has " + std::to_string(products.size()) +
                " elements, W_(X) has " + std::to_string(h.size()));
  }

  // W^(X): minimal length in the coset w W_(X).
  for (WeylElement w : weyl.elements()) {
    std::size_t best = weyl.length(w);
    for (WeylElement s : report.stabilizer) {
      best = std::min(best, weyl.length(weyl.multiply(w, s)));
    }
    if (weyl.length(w) == best) report.min_reps.push_back(w);
  }
  return report;
}

CertificationReport prop_minimal_check(const ActionTable& table,
                                       const OrbitGraph& g,
                                       const WeylGroup& weyl,
                                       const StabilizerReport& report) {
  CertificationReport out;
  out.layer = "prop_minimal";
  VertexIndex x = g.index_of(report.top);
  std::set<WeylElement> reps(report.min_reps.begin(), report.min_reps.end());
  std::map<VertexIndex, std::set<WeylElement>> by_path;
  for (WeylElement w : weyl.elements()) {
    VertexIndex y = table.act(weyl, w, x);
    const std::string& id = g.vertex(y).id;
    if (!by_path.contains(y)) {
      std::set<WeylElement> set;
      try {
        for (const auto& [v, exponent] : weyl_set(g, weyl, id)) set.insert(v);
      } catch (const CertificationError& e) {
        out.add("weyl_set", Severity::kError, e.what(), e.witness());
      }
      by_path[y] = std::move(set);
    }
    std::set<WeylElement> predicted;
    std::set<std::size_t> lengths;
    for (WeylElement s : report.stabilizer) {
      WeylElement u = weyl.multiply(w, s);
      if (reps.contains(u)) {
        predicted.insert(weyl.inverse(u));
        lengths.insert(weyl.length(u));
      }
    }
    if (lengths.size() > 1) {
      out.add("equal_length", Severity::kError,
              "minimal elements of " + weyl.word_string(w) +
                  " W_(X) have different lengths",
              {weyl.word_string(w)});
    }
    if (predicted != by_path[y]) {
      std::vector<std::string> witness{id};
      for (WeylElement v : by_path[y]) witness.push_back("path:" + weyl.word_string(v));
      for (WeylElement v : predicted) witness.push_back("coset:" + weyl.word_string(v));
      out.add("minimal", Severity::kError,
              "W(" + id + ") differs from the coset prediction for w = " +
                  weyl.word_string(w),
              witness);
    }
  }
  return out;
}

GeneratorClassification classify_generators(
    const StabilizerReport& report, const WeylGroup& weyl,
    const std::optional<WeightLattice>& lattice) {
  GeneratorClassification out;
  out.lattice_supplied = lattice.has_value();
  std::set<WeylElement> h(report.stabilizer.begin(), report.stabilizer.end());
  std::map<WeylElement, GeneratorInfo> candidates;
  auto add_tag = [](GeneratorInfo& info, const std::string& tag) {
    if (std::find(info.tags.begin(), info.tags.end(), tag) == info.tags.end()) {
      info.tags.push_back(tag);
    }
  };
  for (RootId r : weyl.positive_roots()) {
    WeylElement s = weyl.reflection(r);
    if (!h.contains(s)) continue;
    GeneratorInfo& info = candidates[s];
    info.element = s;
    info.kind = GeneratorKind::kReflection;
    if (info.roots.empty()) info.roots = {r};
    if (weyl.in_root_subsystem(r, report.delta)) {
      add_tag(info, "alpha_in_phi_delta");
    }
    if (lattice && lattice->contains_root(weyl.root(r), 2)) {
      add_tag(info, "two_alpha_in_lattice");
    }
  }
  for (const CommutingProduct& cp : weyl.commuting_reflection_products()) {
    if (!h.contains(cp.element)) continue;
    GeneratorInfo& info = candidates[cp.element];
    info.element = cp.element;
    info.kind = GeneratorKind::kCommutingProduct;
    if (info.roots.empty()) info.roots = {cp.first, cp.second};
    if (lattice) {
      RootVector sum = weyl.root(cp.first);
      RootVector diff = weyl.root(cp.first);
      for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] += weyl.root(cp.second)[i];
        diff[i] -= weyl.root(cp.second)[i];
      }
      if (lattice->contains_root(sum) || lattice->contains_root(diff)) {
        add_tag(info, "alpha_plus_beta_in_lattice");
      }
    }
  }
  std::vector<GeneratorInfo> ordered;
  for (auto& [w, info] : candidates) ordered.push_back(info);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](const GeneratorInfo& a, const GeneratorInfo& b) {
                     auto key = [&](const GeneratorInfo& g) {
                       return std::make_tuple(lattice && g.tags.empty(),
                                              g.kind, weyl.length(g.element),
                                              g.element);
                     };
                     return key(a) < key(b);
                   });
  std::vector<WeylElement> gens;
  std::set<WeylElement> generated{weyl.identity()};
  for (const GeneratorInfo& info : ordered) {
    if (generated.size() == h.size()) break;
    if (generated.contains(info.element)) continue;
    gens.push_back(info.element);
    std::vector<WeylElement> sub = weyl.generate(gens);
    generated = {sub.begin(), sub.end()};
    out.generators.push_back(info);
    if (lattice && info.tags.empty()) out.untagged.push_back(info.element);
  }
  out.found = generated == h;
  return out;
}

}  // namespace orbitweave
