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

#include <algorithm>
#include <cstdlib>
#include <set>

#include "orbitweave/errors.hpp"
#include "orbitweave/graph_io.hpp"

#ifndef ORBITWEAVE_FIXTURE_DIR
#define ORBITWEAVE_FIXTURE_DIR "fixtures"
#endif

namespace orbitweave {

AtomKind atom_kind_from_string(std::string_view text) {
  if (text == "U") return AtomKind::kU;
  if (text == "T") return AtomKind::kT;
  if (text == "N") return AtomKind::kN;
  throw Error("unknown atom kind '" + std::string(text) + "' (want U, T or N)");
}

OrbitGraph sl2_atom(AtomKind kind) {
  OrbitGraph g(CartanDatum::parse("A1"));
  switch (kind) {
    case AtomKind::kU:
      g.set_rank_of_top(0);
      g.add_vertex({"bottom", 0, 0});
      g.add_vertex({"top", 1, 0});
      g.add_edge({"bottom", "top", 0, EdgeType::kU});
      break;
    case AtomKind::kT:
      g.set_rank_of_top(1);
      g.add_vertex({"y_plus", 1, 0});
      g.add_vertex({"y_minus", 1, 0});
      g.add_vertex({"top", 2, 1});
      g.add_edge({"y_plus", "top", 0, EdgeType::kT});
      g.add_edge({"y_minus", "top", 0, EdgeType::kT});
      break;
    case AtomKind::kN:
      g.set_rank_of_top(1);
      g.add_vertex({"bottom", 1, 0});
      g.add_vertex({"top", 2, 1});
      g.add_edge({"bottom", "top", 0, EdgeType::kN});
      break;
  }
  return g;
}

OrbitGraph flag_case(const CartanDatum& datum,
                     const std::vector<std::size_t>& subset) {
  WeylGroup weyl(datum);
  std::vector<WeylElement> reps = weyl.min_coset_reps(subset);
  std::set<WeylElement> members(reps.begin(), reps.end());
  OrbitGraph g(datum);
  g.set_rank_of_top(0);
  for (WeylElement w : reps) {
    g.add_vertex({weyl.word_string(w), static_cast<int>(weyl.length(w)), 0});
  }
  for (WeylElement w : reps) {
    for (std::size_t a = 0; a < datum.rank(); ++a) {
      WeylElement up = weyl.multiply(weyl.simple_reflection(a), w);
      if (weyl.length(up) == weyl.length(w) + 1 && members.contains(up)) {
        g.add_edge({weyl.word_string(w), weyl.word_string(up), a, EdgeType::kU});
      }
    }
  }
  return g;
}

OrbitGraph group_case(const CartanDatum& datum) {
  WeylGroup weyl(datum);
  std::size_t n = datum.rank();
  OrbitGraph g(datum + datum);
  int rank = static_cast<int>(n);
  g.set_rank_of_top(rank);
  int top_dim = static_cast<int>(weyl.length(weyl.longest()));
  for (WeylElement w : weyl.elements()) {
    g.add_vertex({weyl.word_string(w),
                  top_dim - static_cast<int>(weyl.length(w)), rank});
  }
  for (WeylElement w : weyl.elements()) {
    for (std::size_t a = 0; a < n; ++a) {
      WeylElement s = weyl.simple_reflection(a);
      WeylElement left = weyl.multiply(s, w);
      if (weyl.length(left) < weyl.length(w)) {
        g.add_edge({weyl.word_string(w), weyl.word_string(left), a,
                    EdgeType::kU});
      }
      WeylElement right = weyl.multiply(w, s);
      if (weyl.length(right) < weyl.length(w)) {
        g.add_edge({weyl.word_string(w), weyl.word_string(right), n + a,
                    EdgeType::kU});
      }
    }
  }
  return g;
}

std::pair<WeylElement, WeylElement> split_pair(const WeylGroup& doubled,
                                               const WeylGroup& base,
                                               WeylElement x) {
  std::size_t n = base.rank();
  Word u;
  Word v;
  for (std::size_t letter : doubled.word(x)) {
    if (letter < n) {
      u.push_back(letter);
    } else {
      v.push_back(letter - n);
    }
  }
  return {base.from_word(u), base.from_word(v)};
}

WeylElement join_pair(const WeylGroup& doubled, const WeylGroup& base,
                      WeylElement u, WeylElement v) {
  Word word = base.word(u);
  for (std::size_t letter : base.word(v)) word.push_back(letter + base.rank());
  return doubled.from_word(word);
}

OrbitGraph parabolic_induction(const CartanDatum& datum,
                               const std::vector<std::size_t>& subset,
                               const OrbitGraph& base) {
  std::vector<std::size_t> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i : sorted) {
    if (i >= datum.rank()) {
      throw GraphError("subset index " + std::to_string(i) + " out of range");
    }
  }
  if (!(base.cartan() == datum.restrict_to(sorted))) {
    throw GraphError("base graph has type " + base.cartan().label() +
                     ", expected the restriction of " + datum.label() +
                     " to the subset");
  }
  WeylGroup weyl(datum);
  std::vector<WeylElement> reps = weyl.min_coset_reps(sorted);
  std::set<WeylElement> members(reps.begin(), reps.end());
  auto id_of = [&](WeylElement w, const std::string& y) {
    return weyl.word_string(w) + "|" + y;
  };

  OrbitGraph g(datum);
  g.set_rank_of_top(base.rank_of_top());
  for (WeylElement w : reps) {
    for (VertexIndex y : base.sorted_vertices()) {
      const OrbitVertex& v = base.vertex(y);
      g.add_vertex({id_of(w, v.id), static_cast<int>(weyl.length(w)) + v.dim,
                    v.rank});
    }
  }
  for (WeylElement w : reps) {
    WeylElement w_inv = weyl.inverse(w);
    for (std::size_t a = 0; a < datum.rank(); ++a) {
      RootId beta = weyl.apply(w_inv, weyl.simple_root(a));
      if (!weyl.is_positive(beta)) continue;
      auto in_subset = std::find_if(sorted.begin(), sorted.end(), [&](auto i) {
        return weyl.simple_root(i) == beta;
      });
      if (in_subset == sorted.end()) {
        WeylElement up = weyl.multiply(weyl.simple_reflection(a), w);
        for (VertexIndex y : base.sorted_vertices()) {
          const std::string& id = base.vertex(y).id;
          g.add_edge({id_of(w, id), id_of(up, id), a, EdgeType::kU});
        }
        continue;
      }
      std::size_t local = static_cast<std::size_t>(in_subset - sorted.begin());
      for (const OrbitEdge& e : base.edges()) {
        if (e.label != local) continue;
        g.add_edge({id_of(w, e.src), id_of(w, e.dst), a, e.type});
      }
    }
  }
  CertificationReport report = validate_structure(g);
  if (!report.passed()) {
    auto first = std::find_if(
        report.findings.begin(), report.findings.end(),
        [](const Finding& f) { return f.severity == Severity::kError; });
    throw GraphError("induced graph fails validation: " + first->message);
  }
  return g;
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("ORBITWEAVE_FIXTURES"); env && *env) {
    return env;
  }
  return ORBITWEAVE_FIXTURE_DIR;
}

std::vector<std::string> fixture_names() {
  return {"example1", "example3_full", "example3_quotient", "pgl2sq_diag",
          "pgl3_gl2"};
}

OrbitGraph fixture(const std::string& name) {
  auto names = fixture_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error("unknown fixture '" + name + "'");
  }
  return load_graph((fixture_dir() / (name + ".json")).string());
}

}  // namespace orbitweave
