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

// Reference computations that avoid the library's group tables: Weyl
// elements as integer reflection matrices on the simple-root basis, Bruhat
// order by subword enumeration, and label words of paths by plain DFS.

#ifndef ORBITWEAVE_TESTS_ORACLES_HPP_
#define ORBITWEAVE_TESTS_ORACLES_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbitweave/orbit_graph.hpp"
#include "orbitweave/weyl.hpp"

namespace oracle {

using orbitweave::CartanDatum;
using orbitweave::Matrix;
using orbitweave::Word;

inline Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Column j is s_i(alpha_j) = alpha_j - a(i, j) alpha_i.
inline Matrix reflection(const CartanDatum& d, std::size_t i) {
  Matrix m = identity(d.rank());
  for (std::size_t j = 0; j < d.rank(); ++j) m[i][j] -= d.entry(i, j);
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  Matrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// s_{w_1} ... s_{w_k}.
inline Matrix of_word(const CartanDatum& d, const Word& word) {
  Matrix m = identity(d.rank());
  for (std::size_t letter : word) m = multiply(m, reflection(d, letter));
  return m;
}

// All matrices of words of length up to `max_len`, keyed by matrix with the
// shortest length seen.
inline std::map<Matrix, std::size_t> shortest_lengths(const CartanDatum& d,
                                                      std::size_t max_len) {
  std::map<Matrix, std::size_t> out{{identity(d.rank()), 0}};
  std::vector<Matrix> frontier{identity(d.rank())};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Matrix> next;
    for (const Matrix& m : frontier) {
      for (std::size_t i = 0; i < d.rank(); ++i) {
        Matrix p = multiply(m, reflection(d, i));
        if (out.emplace(p, len).second) next.push_back(p);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// u <= v iff some subword of a reduced word of v multiplies to u.
inline bool subword_leq(const CartanDatum& d, const Word& u, const Word& v) {
  Matrix target = of_word(d, u);
  std::size_t k = v.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Word sub;
    for (std::size_t b = 0; b < k; ++b) {
      if (mask & (std::size_t{1} << b)) sub.push_back(v[b]);
    }
    if (of_word(d, sub) == target) return true;
  }
  return false;
}

struct PathRecord {
  Word labels;  // bottom to top
  std::size_t doubles = 0;
};

// Every oriented path from `src` to `dst` by plain recursion over edges.
inline void paths(const orbitweave::OrbitGraph& g, const std::string& src,
                  const std::string& dst, PathRecord& current,
                  std::vector<PathRecord>& out) {
  if (src == dst) out.push_back(current);
  for (const auto& e : g.edges()) {
    if (e.src != src) continue;
    current.labels.push_back(e.label);
    current.doubles += e.type == orbitweave::EdgeType::kN;
    paths(g, e.dst, dst, current, out);
    current.doubles -= e.type == orbitweave::EdgeType::kN;
    current.labels.pop_back();
  }
}

inline std::vector<PathRecord> paths(const orbitweave::OrbitGraph& g,
                                     const std::string& src,
                                     const std::string& dst) {
  PathRecord current;
  std::vector<PathRecord> out;
  paths(g, src, dst, current, out);
  return out;
}

// w(gamma) = s_{a_l} ... s_{a_1} for labels a_1..a_l (bottom to top).
inline Matrix path_matrix(const CartanDatum& d, const Word& labels) {
  Word reversed(labels.rbegin(), labels.rend());
  return of_word(d, reversed);
}

// The matrix of a library element, read off its action on simple roots.
inline Matrix element_matrix(const orbitweave::WeylGroup& weyl,
                             orbitweave::WeylElement w) {
  std::size_t n = weyl.rank();
  Matrix m(n, std::vector<int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    orbitweave::RootVector e(n, 0);
    e[j] = 1;
    orbitweave::RootVector image = weyl.apply_to_root(w, e);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = image[i];
  }
  return m;
}

}  // namespace oracle

#endif  // ORBITWEAVE_TESTS_ORACLES_HPP_
