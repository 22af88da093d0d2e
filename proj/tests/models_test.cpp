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

#include "orbitweave/models.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "orbitweave/errors.hpp"
#include "orbitweave/isomorphism.hpp"
#include "orbitweave/path_analysis.hpp"
#include "suite.hpp"

namespace orbitweave {
namespace {

std::size_t count_type(const OrbitGraph& g, EdgeType type) {
  std::size_t n = 0;
  for (const auto& e : g.edges()) n += e.type == type;
  return n;
}

TEST(Atoms, Shapes) {
  OrbitGraph u = sl2_atom(AtomKind::kU);
  EXPECT_EQ(u.vertex_count(), 2u);
  EXPECT_EQ(count_type(u, EdgeType::kU), 1u);

  OrbitGraph t = sl2_atom(AtomKind::kT);
  EXPECT_EQ(t.vertex_count(), 3u);
  EXPECT_EQ(count_type(t, EdgeType::kT), 2u);

  OrbitGraph n = sl2_atom(AtomKind::kN);
  EXPECT_EQ(n.vertex_count(), 2u);
  EXPECT_EQ(count_type(n, EdgeType::kN), 1u);

  for (const OrbitGraph* g : {&u, &t, &n}) {
    EXPECT_TRUE(validate_structure(*g).passed());
  }
  EXPECT_EQ(atom_kind_from_string("T"), AtomKind::kT);
  EXPECT_THROW(atom_kind_from_string("X"), Error);
}

TEST(FlagCase, Examples) {
  OrbitGraph a1 = flag_case(CartanDatum::parse("A1"));
  EXPECT_TRUE(find_isomorphism(a1, sl2_atom(AtomKind::kU)).has_value());

  OrbitGraph a2 = flag_case(CartanDatum::parse("A2"));
  EXPECT_EQ(a2.vertex_count(), 6u);
  EXPECT_EQ(count_type(a2, EdgeType::kU), a2.edge_count());

  OrbitGraph chain = flag_case(CartanDatum::parse("A2"), {0});
  EXPECT_EQ(chain.vertex_count(), 3u);
  EXPECT_EQ(chain.edge_count(), 2u);
  for (const auto& v : chain.vertices()) {
    EXPECT_LE(chain.out_edges(chain.index_of(v.id)).size(), 1u);
  }

  EXPECT_EQ(flag_case(CartanDatum::parse("B3")).vertex_count(), 48u);
  EXPECT_THROW(flag_case(CartanDatum::parse("A2"), {5}), Error);
}

TEST(GroupCase, Examples) {
  for (const char* type : {"A1", "A2", "B2"}) {
    CartanDatum d = CartanDatum::parse(type);
    WeylGroup base(d);
    OrbitGraph g = group_case(d);
    WeylGroup doubled(g.cartan());
    EXPECT_EQ(g.vertex_count(), base.elements().size()) << type;
    EXPECT_TRUE(validate_structure(g).passed()) << type;
    std::string bottom = base.word_string(base.longest());
    WeylSet set = weyl_set(g, doubled, bottom);
    // Paths from w0 to e pair up reduced factorisations u v^{-1} = w0.
    EXPECT_EQ(set.size(), base.elements().size()) << type;
    for (const auto& [x, exponent] : set) {
      EXPECT_EQ(exponent, 0);
      auto [u, v] = split_pair(doubled, base, x);
      EXPECT_EQ(base.length(u) + base.length(v),
                base.length(base.longest()));
    }
  }
}

TEST(Induction, ReproducesExample1) {
  CartanDatum a2 = CartanDatum::parse("A2");
  OrbitGraph induced = parabolic_induction(a2, {0}, sl2_atom(AtomKind::kN));
  EXPECT_EQ(count_type(induced, EdgeType::kN), 2u);
  EXPECT_TRUE(
      find_isomorphism_up_to_diagram(induced, fixture("example1")).has_value());
}

TEST(Induction, DegenerateCases) {
  CartanDatum a2 = CartanDatum::parse("A2");
  OrbitGraph point(a2.restrict_to(std::vector<std::size_t>{}));
  point.add_vertex({"pt", 0});
  OrbitGraph from_point = parabolic_induction(a2, {}, point);
  EXPECT_TRUE(find_isomorphism(from_point, flag_case(a2)).has_value());

  OrbitGraph t = sl2_atom(AtomKind::kT);
  OrbitGraph same = parabolic_induction(CartanDatum::parse("A1"), {0}, t);
  EXPECT_TRUE(find_isomorphism(same, t).has_value());

  EXPECT_THROW(parabolic_induction(a2, {0, 1}, t), GraphError);
  EXPECT_THROW(parabolic_induction(a2, {7}, t), Error);
}

TEST(Induction, KeepsMultiplicityFreeness) {
  CartanDatum b2 = CartanDatum::parse("B2");
  for (AtomKind kind : {AtomKind::kU, AtomKind::kT, AtomKind::kN}) {
    OrbitGraph base = sl2_atom(kind);
    for (std::size_t i : {0u, 1u}) {
      OrbitGraph induced = parabolic_induction(b2, {i}, base);
      for (const auto& v : base.vertices()) {
        bool base_free = is_multiplicity_free(base, v.id);
        for (const auto& w : induced.vertices()) {
          if (w.id.substr(w.id.find('|') + 1) != v.id) continue;
          EXPECT_EQ(is_multiplicity_free(induced, w.id), base_free) << w.id;
        }
      }
    }
  }
}

TEST(Fixtures, CountsMatchManifest) {
  std::ifstream in(fixture_dir() / "MANIFEST.json");
  ASSERT_TRUE(in.good());
  auto manifest = nlohmann::json::parse(in);
  for (const auto& name : fixture_names()) {
    ASSERT_TRUE(manifest.contains(name)) << name;
    OrbitGraph g = fixture(name);
    const auto& counts = manifest[name]["counts"];
    EXPECT_EQ(g.vertex_count(), counts["vertices"].get<std::size_t>()) << name;
    EXPECT_EQ(g.edge_count(), counts["edges"].get<std::size_t>()) << name;
    EXPECT_EQ(count_type(g, EdgeType::kN),
              counts["double_edges"].get<std::size_t>())
        << name;
    EXPECT_TRUE(validate_structure(g).passed()) << name;
  }
}

TEST(Fixtures, EnvironmentOverride) {
  auto dir = std::filesystem::temp_directory_path() / "orbitweave_fixture_env";
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(fixture_dir() / "example1.json",
                             dir / "example1.json",
                             std::filesystem::copy_options::overwrite_existing);
  std::filesystem::remove(dir / "pgl3_gl2.json");
  ::setenv("ORBITWEAVE_FIXTURES", dir.c_str(), 1);
  EXPECT_EQ(fixture_dir(), dir);
  EXPECT_EQ(fixture("example1").vertex_count(), 6u);
  EXPECT_THROW(fixture("pgl3_gl2"), Error);
  ::unsetenv("ORBITWEAVE_FIXTURES");
  std::filesystem::remove_all(dir);
  EXPECT_NO_THROW(fixture("pgl3_gl2"));
}

TEST(Fixtures, UnknownName) { EXPECT_THROW(fixture("nope"), Error); }

TEST(ModelProperties, SuiteValidates) {
  for (const auto& [name, g] : testing::certified_suite()) {
    EXPECT_TRUE(validate_structure(g).passed()) << name;
  }
}

}  // namespace
}  // namespace orbitweave
