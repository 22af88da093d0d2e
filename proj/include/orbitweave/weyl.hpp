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

// Finite Weyl groups realized by their action on the root system.
//
// A WeylGroup enumerates every element once, in ShortLex order of the
// canonical (lexicographically least reduced) word, and stores for each
// element the permutation it induces on the root set. Elements are handed
// out as small WeylElement handles that index into the owning table; handles
// from different tables must not be mixed.
//
// Conventions: simple roots are indexed 0..n-1, roots are integer vectors in
// the simple-root basis, and the Cartan matrix entry a(i, j) is the pairing
// <alpha_j, alpha_i^vee>, so s_i(v) = v - <v, alpha_i^vee> alpha_i.
// Composite types "X+Y" index the first summand's simple roots first.

#ifndef ORBITWEAVE_WEYL_HPP_
#define ORBITWEAVE_WEYL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitweave {

using Word = std::vector<std::size_t>;
using RootVector = std::vector<int>;
using Matrix = std::vector<std::vector<int>>;

class CartanDatum {
 public:
  // Parses "A2", "B3", "A1+A1", "G2+A1", ... Supported series: A_n (n>=1),
  // B_n (n>=2), C_n (n>=2), D_n (n>=3), E6-E8, F4, G2.
  static CartanDatum parse(std::string_view label);

  // Arbitrary generalized Cartan matrix; rejects anything that is not of
  // finite type, naming the smallest offending principal submatrix.
  static CartanDatum from_matrix(Matrix matrix, std::string label = "custom");

  const std::string& label() const noexcept { return label_; }
  std::size_t rank() const noexcept { return matrix_.size(); }
  const Matrix& matrix() const noexcept { return matrix_; }
  int entry(std::size_t i, std::size_t j) const { return matrix_.at(i).at(j); }

  bool simply_laced() const;
  // Simple roots alpha_i, alpha_j with a(i, j) == 0.
  bool orthogonal(std::size_t i, std::size_t j) const {
    return i != j && matrix_[i][j] == 0;
  }

  // Principal submatrix on `subset` (taken in ascending order).
  CartanDatum restrict_to(std::span<const std::size_t> subset) const;

  // Direct sum; the left operand's simple roots come first.
  CartanDatum operator+(const CartanDatum& other) const;

  // Permutations p of the simple roots with a(p(i), p(j)) == a(i, j).
  std::vector<std::vector<std::size_t>> diagram_automorphisms() const;

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  CartanDatum(Matrix matrix, std::string label);

  Matrix matrix_;
  std::string label_;
};

enum class WeightBasis { kSimpleRoot, kFundamental };

struct Weight {
  std::vector<int> coefficients;
  WeightBasis basis = WeightBasis::kSimpleRoot;
};

// <lambda, alpha_i^vee>.
int pairing(const CartanDatum& datum, const Weight& weight, std::size_t i);

class WeylElement {
 public:
  constexpr WeylElement() = default;
  constexpr explicit WeylElement(std::uint32_t index) : index_(index) {}
  constexpr std::uint32_t index() const noexcept { return index_; }
  friend constexpr auto operator<=>(WeylElement, WeylElement) = default;

 private:
  std::uint32_t index_ = 0;
};

using RootId = std::uint32_t;

struct CommutingProduct {
  WeylElement element;
  RootId first;   // positive roots, first < second
  RootId second;
};

enum class CosetSide { kLeft, kRight };  // kLeft: w*H, kRight: H*w

class WeylGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 100000;

  explicit WeylGroup(CartanDatum datum,
                     std::size_t order_cap = kDefaultOrderCap);

  const CartanDatum& datum() const noexcept { return datum_; }
  std::size_t rank() const noexcept { return datum_.rank(); }
  std::size_t order() const noexcept { return lengths_.size(); }

  WeylElement identity() const { return WeylElement(0); }
  WeylElement simple_reflection(std::size_t i) const;
  WeylElement longest() const { return longest_; }
  WeylElement element(std::size_t index) const;
  // All elements in ShortLex order of their canonical words.
  std::vector<WeylElement> elements() const;

  std::size_t length(WeylElement w) const { return lengths_.at(w.index()); }
  const Word& word(WeylElement w) const { return words_.at(w.index()); }
  std::string word_string(WeylElement w) const;

  WeylElement multiply(WeylElement a, WeylElement b) const;
  WeylElement inverse(WeylElement a) const { return inverses_.at(a.index()); }
  WeylElement from_word(std::span<const std::size_t> word) const;

  // Roots.
  std::size_t root_count() const noexcept { return roots_.size(); }
  const RootVector& root(RootId r) const { return roots_.at(r); }
  RootId simple_root(std::size_t i) const { return simple_roots_.at(i); }
  bool is_positive(RootId r) const;
  RootId negate(RootId r) const { return negations_.at(r); }
  std::optional<RootId> find_root(const RootVector& v) const;
  std::vector<RootId> positive_roots() const;

  // w(r); throws if `r` is not a root vector.
  RootId apply(WeylElement w, RootId r) const;
  RootVector apply_to_root(WeylElement w, const RootVector& r) const;

  // <r, s^vee> for roots r, s (computed from the reflection s_s).
  int coroot_pairing(RootId r, RootId s) const;
  bool orthogonal_roots(RootId r, RootId s) const;
  // True iff r is in the span of the simple roots indexed by `subset`.
  bool in_root_subsystem(RootId r, std::span<const std::size_t> subset) const;

  bool bruhat_leq(WeylElement u, WeylElement v) const;

  // {w : w(alpha_i) > 0 for i in subset}.
  std::vector<WeylElement> min_coset_reps(
      std::span<const std::size_t> subset) const;
  std::vector<WeylElement> parabolic_subgroup(
      std::span<const std::size_t> subset) const;

  bool is_subgroup(std::span<const WeylElement> set) const;
  // Minimal-length elements of w*H (kLeft) or H*w (kRight). Throws if H is
  // not a subgroup.
  std::vector<WeylElement> min_in_coset(WeylElement w,
                                        std::span<const WeylElement> subgroup,
                                        CosetSide side = CosetSide::kLeft) const;

  // Order of s_i s_j, i != j.
  int braid_order(std::size_t i, std::size_t j) const;

  WeylElement reflection(RootId r) const;
  // s_r for every positive root r, in root order.
  std::vector<WeylElement> reflections() const;
  // s_r s_t for orthogonal positive roots r < t, one entry per root pair.
  std::vector<CommutingProduct> commuting_reflection_products() const;

  // Subgroup generated by `generators`, sorted.
  std::vector<WeylElement> generate(
      std::span<const WeylElement> generators) const;

 private:
  const std::vector<RootId>& perm(WeylElement w) const {
    return perms_.at(w.index());
  }
  std::vector<RootId> key_of(const std::vector<RootId>& perm) const;

  CartanDatum datum_;
  std::vector<RootVector> roots_;
  std::map<RootVector, RootId> root_index_;
  std::vector<RootId> simple_roots_;
  std::vector<RootId> negations_;
  std::vector<std::vector<RootId>> simple_perms_;

  std::vector<std::vector<RootId>> perms_;
  std::vector<Word> words_;
  std::vector<std::size_t> lengths_;
  std::vector<WeylElement> inverses_;
  std::map<std::vector<RootId>, std::uint32_t> index_;
  WeylElement longest_;
  mutable std::vector<std::optional<WeylElement>> reflection_cache_;
};

// Root closure of a Cartan matrix under the simple reflections; nullopt if
// more than `cap` roots appear (not of finite type).
std::optional<std::vector<RootVector>> root_closure(const Matrix& matrix,
                                                    std::size_t cap);

std::string word_to_string(std::span<const std::size_t> word);

}  // namespace orbitweave

#endif  // ORBITWEAVE_WEYL_HPP_
