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

// Integer spans of weights. Everything is stored in coordinates
// (<lambda, alpha_i^vee>)_i, which are integral for every weight and
// injective because the Cartan matrix is nondegenerate.

#ifndef ORBITWEAVE_LATTICE_HPP_
#define ORBITWEAVE_LATTICE_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "orbitweave/weyl.hpp"

namespace orbitweave {

class WeightLattice {
 public:
  WeightLattice(const CartanDatum& datum, const std::vector<Weight>& generators);

  bool contains(const Weight& weight) const;
  // Root given in simple-root coordinates, scaled by `factor`.
  bool contains_root(const RootVector& root, int factor = 1) const;
  std::size_t rank() const noexcept { return basis_.size(); }

 private:
  bool contains_coords(std::vector<std::int64_t> v) const;

  CartanDatum datum_;
  std::vector<std::vector<std::int64_t>> basis_;  // row echelon form
};

// Parses "1,1;2,0" style generator lists (simple-root basis).
std::vector<Weight> parse_weights(std::string_view text);

}  // namespace orbitweave

#endif  // ORBITWEAVE_LATTICE_HPP_
