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

// Knop's action of W on the vertex set, read off the edge types:
// s_alpha exchanges the endpoints of an alpha-edge of type U, exchanges the
// two sources of a pair of alpha-edges of type T (fixing their target), and
// fixes everything else, in particular both ends of an N edge.

#ifndef ORBITWEAVE_KNOP_ACTION_HPP_
#define ORBITWEAVE_KNOP_ACTION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbitweave/lattice.hpp"
#include "orbitweave/orbit_graph.hpp"
#include "orbitweave/weyl.hpp"

namespace orbitweave {

class ActionTable {
 public:
  ActionTable(std::vector<std::string> ids,
              std::vector<std::vector<VertexIndex>> generators)
      : ids_(std::move(ids)), generators_(std::move(generators)) {}

  std::size_t rank() const noexcept { return generators_.size(); }
  std::size_t vertex_count() const noexcept { return ids_.size(); }
  const std::string& id(VertexIndex v) const { return ids_.at(v); }

  VertexIndex apply(std::size_t label, VertexIndex v) const {
    return generators_.at(label).at(v);
  }
  const std::vector<VertexIndex>& generator(std::size_t label) const {
    return generators_.at(label);
  }
  // s_{a_1} ... s_{a_k} acts by applying a_k first.
  VertexIndex act_word(const Word& word, VertexIndex v) const;
  VertexIndex act(const WeylGroup& weyl, WeylElement w, VertexIndex v) const {
    return act_word(weyl.word(w), v);
  }

  // Orbit of v under the generators, sorted.
  std::vector<VertexIndex> orbit(VertexIndex v) const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<VertexIndex>> generators_;
};

// Throws CertificationError when a T edge has no partner, or when a vertex
// would be moved by two different edges of the same label.
ActionTable build_action(const OrbitGraph& g);

// Involutions and (s_a s_b)^{m(a, b)} = id on every vertex.
CertificationReport certify_action(const ActionTable& table,
                                   const CartanDatum& datum);

// W-orbit of the component top of `vertex` (default: the unique top). Throws
// CertificationError if it differs from the set of vertices of top rank.
std::vector<VertexIndex> max_rank_orbit(const ActionTable& table,
                                        const OrbitGraph& g);

enum class GeneratorKind { kReflection, kCommutingProduct };

struct GeneratorInfo {
  WeylElement element;
  GeneratorKind kind = GeneratorKind::kReflection;
  // One root for a reflection, two orthogonal ones for a product.
  std::vector<RootId> roots;
  // "alpha_in_phi_delta", "two_alpha_in_lattice", "alpha_plus_beta_in_lattice".
  std::vector<std::string> tags;
};

struct GeneratorClassification {
  bool found = false;  // reflections and commuting products generate
  bool lattice_supplied = false;
  std::vector<GeneratorInfo> generators;
  std::vector<WeylElement> untagged;
};

struct StabilizerReport {
  std::string top;
  std::vector<WeylElement> stabilizer;     // W_(X)
  std::vector<std::size_t> delta;          // Delta(X)
  std::vector<WeylElement> parabolic;      // W_Delta(X)
  std::vector<WeylElement> complement;     // W_X
  std::vector<WeylElement> min_reps;       // W^(X)
  CertificationReport decomposition;       // semidirect product checks
  std::optional<GeneratorClassification> generators;
};

// Stabilizer of `top` (default: the unique maximal vertex of g).
StabilizerReport stabilizer(const ActionTable& table, const OrbitGraph& g,
                            const WeylGroup& weyl,
                            std::optional<std::string> top = std::nullopt);

// For every w in W: W(w . top) from paths equals
// {v : v^{-1} in W^(X) cap w W_(X)}, and the minimal elements of each coset
// w W_(X) have one common length.
CertificationReport prop_minimal_check(const ActionTable& table,
                                       const OrbitGraph& g,
                                       const WeylGroup& weyl,
                                       const StabilizerReport& report);

GeneratorClassification classify_generators(
    const StabilizerReport& report, const WeylGroup& weyl,
    const std::optional<WeightLattice>& lattice = std::nullopt);

}  // namespace orbitweave

#endif  // ORBITWEAVE_KNOP_ACTION_HPP_
