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

// Graphs that are certified by construction: the three SL(2) atoms, flag
// varieties G/P, the group case G x G / diag(G), parabolic induction, and
// the transcribed fixtures shipped under fixtures/.

#ifndef ORBITWEAVE_MODELS_HPP_
#define ORBITWEAVE_MODELS_HPP_

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "orbitweave/orbit_graph.hpp"
#include "orbitweave/weyl.hpp"

namespace orbitweave {

enum class AtomKind { kU, kT, kN };

AtomKind atom_kind_from_string(std::string_view text);

// U: bottom -> top. T: y_plus, y_minus -> top. N: bottom => top.
OrbitGraph sl2_atom(AtomKind kind);

// Vertices W^I named by canonical words ("e", "s1s0", ...), all of rank 0.
OrbitGraph flag_case(const CartanDatum& datum,
                     const std::vector<std::size_t>& subset = {});

// Over datum + datum. Vertex w has dim l(w0) - l(w) and rank rank(datum);
// labels 0..n-1 act on the left, n..2n-1 on the right.
OrbitGraph group_case(const CartanDatum& datum);

// (u, v) for an element of the doubled group, and back.
std::pair<WeylElement, WeylElement> split_pair(const WeylGroup& doubled,
                                               const WeylGroup& base,
                                               WeylElement x);
WeylElement join_pair(const WeylGroup& doubled, const WeylGroup& base,
                      WeylElement u, WeylElement v);

// G x^{P_I} X' from the graph of X' over the restriction of `datum` to
// `subset`. Vertex ids are "<word of w>|<base id>". Throws GraphError on a
// base type mismatch or if the result fails validation.
OrbitGraph parabolic_induction(const CartanDatum& datum,
                               const std::vector<std::size_t>& subset,
                               const OrbitGraph& base);

// ORBITWEAVE_FIXTURES if set, else the source tree's fixtures/.
std::filesystem::path fixture_dir();
std::vector<std::string> fixture_names();
// Throws Error for unknown names.
OrbitGraph fixture(const std::string& name);

}  // namespace orbitweave

#endif  // ORBITWEAVE_MODELS_HPP_
