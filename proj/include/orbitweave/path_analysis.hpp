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

// Oriented paths in a weak-order graph and the invariants read off them.
//
// A path gamma from Y to Y' with labels a_1, ..., a_l (bottom to top) has
// Weyl element w(gamma) = s_{a_l} ... s_{a_1}. For Y and the top X of its
// component, the set W(Y) collects every w(gamma) together with the degree
// d(Y, w) = 2^{l_N(gamma)}, stored as the exponent l_N. The Schubert-basis
// expansion of the class of the corresponding subvariety of G/B is then
// sum_w d(Y, w) [B w0 w B / B].
//
// Every routine here enumerates paths exhaustively. That is the intended
// oracle at fixture scale (a few hundred paths), not an approximation.

#ifndef ORBITWEAVE_PATH_ANALYSIS_HPP_
#define ORBITWEAVE_PATH_ANALYSIS_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitweave/orbit_graph.hpp"
#include "orbitweave/weyl.hpp"

namespace orbitweave {

struct PathSummary {
  std::vector<std::string> vertices;  // bottom to top, length()+1 entries
  std::vector<std::size_t> labels;
  std::vector<EdgeType> types;
  WeylElement w;
  std::size_t count_u = 0;
  std::size_t count_t = 0;
  std::size_t count_n = 0;

  std::size_t length() const { return labels.size(); }
  std::string to_string() const;
};

// Calls `visit` on every oriented path starting at `source`, including the
// empty one. Returning false from `visit` stops the walk below that path.
void for_each_path_from(const OrbitGraph& g, const WeylGroup& weyl,
                        VertexIndex source,
                        const std::function<bool(const PathSummary&)>& visit);

std::vector<PathSummary> enumerate_paths(const OrbitGraph& g,
                                         const WeylGroup& weyl,
                                         std::string_view source,
                                         std::string_view target);

// w -> l_N, i.e. d(Y, w) = 2^{l_N}.
using WeylSet = std::map<WeylElement, int>;

// Throws CertificationError (two witness paths) if two paths to the top
// share w(gamma) but not l_N.
WeylSet weyl_set(const OrbitGraph& g, const WeylGroup& weyl,
                 std::string_view vertex);

bool is_multiplicity_free(const OrbitGraph& g, std::string_view vertex);

// Reducedness, l_T + l_N = rank difference, and constancy of l_N per
// (source, target, w) over all paths of the graph.
CertificationReport certify_paths(const OrbitGraph& g, const WeylGroup& weyl);

struct Codim1Link {
  WeylElement u;
  WeylElement v;
  WeylElement dominant;  // w with u, v <= w and l(w) = l(u) + 1
};

struct Codim1Result {
  bool connected = false;
  std::vector<Codim1Link> links;  // spanning forest of the adjacency
};

// u ~ v iff some w of length l(u)+1 with w^{-1} in W^{delta} lies above both
// in the Bruhat order. Throws if the elements of `set` differ in length.
Codim1Result codim1_connected(const WeylGroup& weyl,
                              const std::vector<WeylElement>& set,
                              const std::vector<std::size_t>& delta);

struct ExpansionReport {
  std::string vertex;
  WeylSet weyl_set;
  std::map<WeylElement, int> terms;  // w0 w -> log2 of the coefficient
  bool multiplicity_free = false;
  Codim1Result v0;
};

ExpansionReport schubert_expansion(const OrbitGraph& g, const WeylGroup& weyl,
                                   std::string_view vertex);

// u = x (s_a s_b)^{(m)} y and v = x (s_b s_a)^{(m)} y, lengths adding up,
// 0 < m < m(a, b). (s_a s_b)^{(m)} has m letters and ends with s_a.
struct NeighborFactorization {
  WeylElement x;
  WeylElement y;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  int m = 0;
};

std::vector<NeighborFactorization> neighbor_factorizations(
    const WeylGroup& weyl, WeylElement u, WeylElement v,
    bool first_only = false);
bool is_neighbor(const WeylGroup& weyl, WeylElement u, WeylElement v);
// Adjacency lists over the positions of `set`.
std::vector<std::vector<std::size_t>> neighbor_graph(
    const WeylGroup& weyl, const std::vector<WeylElement>& set);
bool neighbor_connectivity(const OrbitGraph& g, const WeylGroup& weyl,
                           std::string_view vertex);

// For every ordered vertex pair, all connecting paths have the same l_N.
// On simply-laced types a failure also marks the graph as non-certifiable.
CertificationReport constancy_check(const OrbitGraph& g,
                                    const WeylGroup& weyl);

enum class Verdict { kHolds, kFails, kNotApplicable };
std::string to_string(Verdict verdict);

struct PathVerdict {
  Verdict verdict = Verdict::kNotApplicable;
  std::optional<PathSummary> witness;
};

// A path to the top made of simple edges followed by double edges.
PathVerdict simple_then_double_exists(const OrbitGraph& g,
                                      const WeylGroup& weyl,
                                      std::string_view vertex);

// <omega_D, alpha^vee> <= 1 for every supplied color weight and every simple
// root. Not applicable to non-simply-laced types.
Verdict color_simplicity(const std::vector<Weight>& weights,
                         const CartanDatum& datum);

// Multiplicity-freeness is inherited upward along the weak order.
CertificationReport multiplicity_free_monotone(const OrbitGraph& g);

// W(Y) of distinct vertices of maximal rank in a component are disjoint.
CertificationReport max_rank_disjoint(const OrbitGraph& g,
                                      const WeylGroup& weyl);

// Codimension-one connectivity and neighbor connectivity of W(Y) for every
// vertex. Failures mean the graph is not realizable, not a tool error.
CertificationReport connectivity_checks(const OrbitGraph& g,
                                        const WeylGroup& weyl);

}  // namespace orbitweave

#endif  // ORBITWEAVE_PATH_ANALYSIS_HPP_
