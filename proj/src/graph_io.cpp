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

#include "orbitweave/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "orbitweave/errors.hpp"

namespace orbitweave {

namespace {

using nlohmann::json;

void check_keys(const json& object, const std::string& pointer,
                const std::set<std::string>& required,
                const std::set<std::string>& optional) {
  if (!object.is_object()) throw SchemaError(pointer, "expected an object");
  for (const auto& [key, value] : object.items()) {
    if (!required.contains(key) && !optional.contains(key)) {
      throw SchemaError(pointer + "/" + key, "unknown field '" + key + "'");
    }
  }
  for (const std::string& key : required) {
    if (!object.contains(key)) {
      throw SchemaError(pointer + "/" + key, "missing field '" + key + "'");
    }
  }
}

std::string get_string(const json& value, const std::string& pointer) {
  if (!value.is_string()) throw SchemaError(pointer, "expected a string");
  return value.get<std::string>();
}

int get_int(const json& value, const std::string& pointer, bool nonnegative) {
  if (!value.is_number_integer()) {
    throw SchemaError(pointer, "expected an integer");
  }
  if (value.is_number_unsigned()) {
    auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
      throw SchemaError(pointer, "integer out of range");
    }
    return static_cast<int>(u);
  }
  auto v = value.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    throw SchemaError(pointer, "integer out of range");
  }
  if (nonnegative && v < 0) throw SchemaError(pointer, "must be nonnegative");
  return static_cast<int>(v);
}

std::optional<int> get_optional_int(const json& object, const std::string& key,
                                    const std::string& pointer) {
  if (!object.contains(key) || object.at(key).is_null()) return std::nullopt;
  return get_int(object.at(key), pointer + "/" + key, true);
}

}  // namespace

OrbitGraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  check_keys(doc, "", {"cartan", "vertices", "edges"}, {"rank_of_top"});

  std::optional<CartanDatum> datum;
  try {
    datum = CartanDatum::parse(get_string(doc.at("cartan"), "/cartan"));
  } catch (const CartanError& e) {
    throw SchemaError("/cartan", e.what());
  }
  OrbitGraph g(*datum);
  g.set_rank_of_top(get_optional_int(doc, "rank_of_top", ""));

  const json& vertices = doc.at("vertices");
  if (!vertices.is_array()) throw SchemaError("/vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::string pointer = "/vertices/" + std::to_string(i);
    const json& v = vertices[i];
    check_keys(v, pointer, {"id", "dim"}, {"rank"});
    OrbitVertex vertex{get_string(v.at("id"), pointer + "/id"),
                       get_int(v.at("dim"), pointer + "/dim", true),
                       get_optional_int(v, "rank", pointer)};
    try {
      g.add_vertex(std::move(vertex));
    } catch (const GraphError& e) {
      throw SchemaError(pointer + "/id", e.what());
    }
  }

  const json& edges = doc.at("edges");
  if (!edges.is_array()) throw SchemaError("/edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string pointer = "/edges/" + std::to_string(i);
    const json& e = edges[i];
    check_keys(e, pointer, {"src", "dst", "label", "type"}, {});
    std::string type = get_string(e.at("type"), pointer + "/type");
    if (type != "U" && type != "T" && type != "N") {
      throw SchemaError(pointer + "/type", "expected \"U\", \"T\" or \"N\"");
    }
    int label = get_int(e.at("label"), pointer + "/label", true);
    if (static_cast<std::size_t>(label) >= datum->rank()) {
      throw SchemaError(pointer + "/label",
                        "label " + std::to_string(label) + " out of range");
    }
    OrbitEdge edge{get_string(e.at("src"), pointer + "/src"),
                   get_string(e.at("dst"), pointer + "/dst"),
                   static_cast<std::size_t>(label),
                   edge_type_from_char(type.front())};
    std::string field = !g.contains(edge.src)   ? "/src"
                        : !g.contains(edge.dst) ? "/dst"
                                                : "";
    try {
      g.add_edge(std::move(edge));
    } catch (const GraphError& err) {
      throw SchemaError(pointer + field, err.what());
    }
  }
  return g;
}

OrbitGraph load_graph(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    std::string text{std::istreambuf_iterator<char>(stdin_stream),
                     std::istreambuf_iterator<char>()};
    return parse_graph_json(text);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return parse_graph_json(text);
}

OrbitGraph load_graph(const std::string& path) {
  return load_graph(path, std::cin);
}

std::string write_graph_json(const OrbitGraph& g) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["cartan"] = g.cartan().label();
  if (g.rank_of_top()) doc["rank_of_top"] = *g.rank_of_top();
  doc["vertices"] = ordered_json::array();
  for (VertexIndex v : g.sorted_vertices()) {
    const OrbitVertex& vertex = g.vertex(v);
    ordered_json item;
    item["id"] = vertex.id;
    item["dim"] = vertex.dim;
    if (vertex.rank) item["rank"] = *vertex.rank;
    doc["vertices"].push_back(std::move(item));
  }
  doc["edges"] = ordered_json::array();
  for (EdgeIndex e : g.sorted_edges()) {
    const OrbitEdge& edge = g.edge(e);
    ordered_json item;
    item["src"] = edge.src;
    item["dst"] = edge.dst;
    item["label"] = edge.label;
    item["type"] = std::string(1, to_char(edge.type));
    doc["edges"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const OrbitGraph& g) {
  std::ostringstream out;
  out << "digraph weak_order {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=ellipse];\n";
  std::map<int, std::vector<VertexIndex>> levels;
  for (VertexIndex v : g.sorted_vertices()) {
    levels[g.vertex(v).dim].push_back(v);
  }
  for (const auto& [dim, members] : levels) {
    out << "  { rank=same;";
    for (VertexIndex v : members) out << " " << quoted(g.vertex(v).id) << ";";
    out << " }  // dim " << dim << "\n";
  }
  for (EdgeIndex e : g.sorted_edges()) {
    const OrbitEdge& edge = g.edge(e);
    out << "  " << quoted(edge.src) << " -> " << quoted(edge.dst)
        << " [label=\"α" << edge.label << "\"";
    if (edge.type == EdgeType::kN) {
      out << ", penwidth=2, color=\"black:black\"";
    } else if (edge.type == EdgeType::kT) {
      out << ", style=dashed";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace orbitweave
