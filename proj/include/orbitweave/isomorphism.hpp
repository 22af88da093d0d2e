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

#ifndef ORBITWEAVE_ISOMORPHISM_HPP_
#define ORBITWEAVE_ISOMORPHISM_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitweave/orbit_graph.hpp"

namespace orbitweave {

struct GraphIsomorphism {
  std::map<std::string, std::string> vertex_map;  // id in a -> id in b
  std::vector<std::size_t> label_map;             // label in a -> label in b
};

// Typed, labeled isomorphism a -> b with edge labels translated through
// `label_map` (identity when empty). Dimensions must agree up to one global
// shift; ranks are compared where both graphs carry them.
std::optional<GraphIsomorphism> find_isomorphism(
    const OrbitGraph& a, const OrbitGraph& b,
    const std::vector<std::size_t>& label_map = {});

// Tries every Dynkin diagram automorphism of a's Cartan datum.
std::optional<GraphIsomorphism> find_isomorphism_up_to_diagram(
    const OrbitGraph& a, const OrbitGraph& b);

}  // namespace orbitweave

#endif  // ORBITWEAVE_ISOMORPHISM_HPP_
