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

#include "orbitweave/lattice.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>

#include "orbitweave/errors.hpp"

namespace orbitweave {

namespace {

using Row = std::vector<std::int64_t>;

Row coords(const CartanDatum& datum, const Weight& weight) {
  if (weight.coefficients.size() != datum.rank()) {
    throw Error("weight has " + std::to_string(weight.coefficients.size()) +
                " coefficients, expected " + std::to_string(datum.rank()));
  }
  Row out(datum.rank());
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    out[i] = pairing(datum, weight, i);
  }
  return out;
}

// Integer row reduction (Hermite style) of `rows`.
std::vector<Row> echelon(std::vector<Row> rows, std::size_t width) {
  std::vector<Row> basis;
  for (std::size_t col = 0; col < width && !rows.empty(); ++col) {
    // Euclid on column `col` until at most one row is nonzero there.
    for (;;) {
      std::size_t pivot = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (pivot == rows.size() ||
            std::llabs(rows[r][col]) < std::llabs(rows[pivot][col])) {
          pivot = r;
        }
      }
      if (pivot == rows.size()) break;
      bool reduced = true;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == pivot || rows[r][col] == 0) continue;
        std::int64_t q = rows[r][col] / rows[pivot][col];
        for (std::size_t c = 0; c < width; ++c) rows[r][c] -= q * rows[pivot][c];
        if (rows[r][col] != 0) reduced = false;
      }
      if (reduced) {
        basis.push_back(rows[pivot]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
        break;
      }
    }
  }
  return basis;
}

}  // namespace

WeightLattice::WeightLattice(const CartanDatum& datum,
                             const std::vector<Weight>& generators)
    : datum_(datum) {
  std::vector<Row> rows;
  for (const Weight& g : generators) rows.push_back(coords(datum, g));
  basis_ = echelon(std::move(rows), datum.rank());
}

bool WeightLattice::contains_coords(Row v) const {
  std::size_t col = 0;
  for (const Row& b : basis_) {
    while (col < v.size() && b[col] == 0) {
      if (v[col] != 0) return false;
      ++col;
    }
    if (v[col] % b[col] != 0) return false;
    std::int64_t q = v[col] / b[col];
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= q * b[c];
    ++col;
  }
  for (std::int64_t x : v) {
    if (x != 0) return false;
  }
  return true;
}

bool WeightLattice::contains(const Weight& weight) const {
  return contains_coords(coords(datum_, weight));
}

bool WeightLattice::contains_root(const RootVector& root, int factor) const {
  Weight w{root, WeightBasis::kSimpleRoot};
  for (int& c : w.coefficients) c *= factor;
  return contains(w);
}

std::vector<Weight> parse_weights(std::string_view text) {
  std::vector<Weight> out;
  std::stringstream groups{std::string(text)};
  std::string group;
  while (std::getline(groups, group, ';')) {
    if (group.empty()) continue;
    Weight w;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        std::size_t used = 0;
        w.coefficients.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw Error("bad weight coefficient '" + item + "'");
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace orbitweave
