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

// JSON graph format:
//
//   {"cartan": "A2", "rank_of_top": 1,
//    "vertices": [{"id": "v", "dim": 0, "rank": 0}, ...],
//    "edges": [{"src": "v", "dst": "w", "label": 0, "type": "U"}, ...]}
//
// Unknown fields are rejected. Every error is a SchemaError carrying the
// JSON pointer of the offending value.

#ifndef ORBITWEAVE_GRAPH_IO_HPP_
#define ORBITWEAVE_GRAPH_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "orbitweave/orbit_graph.hpp"

namespace orbitweave {

OrbitGraph parse_graph_json(std::string_view text);
// "-" reads `stdin_stream`.
OrbitGraph load_graph(const std::string& path, std::istream& stdin_stream);
OrbitGraph load_graph(const std::string& path);

// Keys in schema order, vertices by (dim, id), edges by (src, dst, label).
std::string write_graph_json(const OrbitGraph& g);

// One rank=same group per dimension; N edges drawn doubled.
std::string export_dot(const OrbitGraph& g);

}  // namespace orbitweave

#endif  // ORBITWEAVE_GRAPH_IO_HPP_
