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

#include "orbitweave/weyl.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "orbitweave/errors.hpp"

namespace orbitweave {
namespace {

Matrix matrix_of(const WeylGroup& weyl, WeylElement w) {
  return oracle::element_matrix(weyl, w);
}

WeylElement w_of(const WeylGroup& weyl, Word word) {
  return weyl.from_word(word);
}

TEST(Cartan, ParsesSumsAndOrders) {
  EXPECT_EQ(WeylGroup(CartanDatum::parse("A2")).order(), 6u);
  EXPECT_EQ(WeylGroup(CartanDatum::parse("B2")).order(), 8u);
  EXPECT_EQ(WeylGroup(CartanDatum::parse("A1+A1")).order(), 4u);
  EXPECT_EQ(WeylGroup(CartanDatum::parse("G2")).order(), 12u);
}

TEST(Cartan, ClassicalOrdersUpToRankFour) {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"A1", 2},    {"A3", 24},    {"A4", 120},   {"B3", 48},
      {"B4", 384},  {"C3", 48},    {"C4", 384},   {"D4", 192},
      {"F4", 1152}, {"A2+A1", 12}, {"B2+A1", 16}, {"A1+A1+A1+A1", 16},
  };
  for (const auto& [label, order] : cases) {
    EXPECT_EQ(WeylGroup(CartanDatum::parse(label)).order(), order) << label;
  }
}

TEST(Cartan, RejectsMalformedLabels) {
  EXPECT_THROW(CartanDatum::parse("Q2"), CartanError);
  EXPECT_THROW(CartanDatum::parse("A0"), CartanError);
  EXPECT_THROW(CartanDatum::parse("B1"), CartanError);
  EXPECT_THROW(CartanDatum::parse("A2+"), CartanError);
  EXPECT_THROW(CartanDatum::parse(""), CartanError);
}

TEST(Cartan, RejectsNonFiniteTypeWithSubmatrix) {
  // Affine A1: the 2x2 block itself is the offender.
  try {
    CartanDatum::from_matrix({{2, -2}, {-2, 2}});
    FAIL() << "expected CartanError";
  } catch (const CartanError& e) {
    EXPECT_NE(std::string(e.what()).find("[[2,-2],[-2,2]]"), std::string::npos)
        << e.what();
  }
  // A 3-cycle of A2 links (affine A2) hides inside a larger matrix.
  EXPECT_THROW(CartanDatum::from_matrix({{2, -1, -1, 0},
                                         {-1, 2, -1, 0},
                                         {-1, -1, 2, 0},
                                         {0, 0, 0, 2}}),
               CartanError);
  EXPECT_THROW(CartanDatum::from_matrix({{2, 1}, {1, 2}}), CartanError);
  EXPECT_THROW(CartanDatum::from_matrix({{3, 0}, {0, 2}}), CartanError);
  EXPECT_THROW(CartanDatum::from_matrix({{2, -1}, {0, 2}}), CartanError);
}

TEST(Cartan, OrderCapRejectsLargeTypes) {
  EXPECT_THROW(WeylGroup(CartanDatum::parse("A5"), 100), CartanError);
  EXPECT_THROW(WeylGroup(CartanDatum::parse("E8")), CartanError);
}

TEST(Length, Examples) {
  WeylGroup a2(CartanDatum::parse("A2"));
  EXPECT_EQ(a2.length(a2.identity()), 0u);
  EXPECT_EQ(a2.length(a2.longest()), 3u);
  WeylGroup b2(CartanDatum::parse("B2"));
  EXPECT_EQ(b2.length(w_of(b2, {0, 1, 0})), 3u);
}

TEST(Length, ThreeLetterWordMatchesShortestWordOracle) {
  CartanDatum d = CartanDatum::parse("B2");
  auto lengths = oracle::shortest_lengths(d, 8);
  WeylGroup b2(d);
  WeylElement w = w_of(b2, {0, 1, 0});
  EXPECT_EQ(lengths.at(matrix_of(b2, w)), 3u);
}

TEST(Multiply, Examples) {
  WeylGroup a2(CartanDatum::parse("A2"));
  WeylElement sa = a2.simple_reflection(0);
  WeylElement sb = a2.simple_reflection(1);
  EXPECT_EQ(a2.multiply(sa, sa), a2.identity());
  WeylElement p = a2.multiply(sa, sb);
  EXPECT_NE(p, a2.identity());
  EXPECT_NE(a2.multiply(p, p), a2.identity());
  EXPECT_EQ(a2.multiply(a2.multiply(p, p), p), a2.identity());
  EXPECT_EQ(a2.inverse(p), a2.multiply(sb, sa));
  for (WeylElement w : a2.elements()) {
    EXPECT_EQ(a2.multiply(a2.inverse(w), w), a2.identity());
  }
}

TEST(ApplyToRoot, Examples) {
  WeylGroup a2(CartanDatum::parse("A2"));
  EXPECT_EQ(a2.apply_to_root(a2.identity(), {1, 0}), (RootVector{1, 0}));
  EXPECT_EQ(a2.apply_to_root(a2.simple_reflection(0), {1, 0}),
            (RootVector{-1, 0}));
  EXPECT_EQ(a2.apply_to_root(a2.simple_reflection(1), {1, 0}),
            (RootVector{1, 1}));
  EXPECT_THROW(a2.apply_to_root(a2.identity(), {2, 0}), Error);
  EXPECT_THROW(a2.apply_to_root(a2.identity(), {1, 0, 0}), Error);
}

TEST(Bruhat, Examples) {
  WeylGroup a2(CartanDatum::parse("A2"));
  for (WeylElement v : a2.elements()) {
    EXPECT_TRUE(a2.bruhat_leq(a2.identity(), v));
  }
  EXPECT_TRUE(a2.bruhat_leq(a2.simple_reflection(0), w_of(a2, {1, 0})));
  EXPECT_FALSE(a2.bruhat_leq(a2.simple_reflection(0), a2.simple_reflection(1)));
}

class BruhatOracle : public ::testing::TestWithParam<std::string> {};

TEST_P(BruhatOracle, MatchesSubwordEnumeration) {
  CartanDatum d = CartanDatum::parse(GetParam());
  WeylGroup weyl(d);
  std::size_t mismatches = 0;
  for (WeylElement u : weyl.elements()) {
    for (WeylElement v : weyl.elements()) {
      bool expected = oracle::subword_leq(d, weyl.word(u), weyl.word(v));
      if (weyl.bruhat_leq(u, v) != expected) ++mismatches;
    }
  }
  EXPECT_EQ(mismatches, 0u);
}

INSTANTIATE_TEST_SUITE_P(SmallTypes, BruhatOracle,
                         ::testing::Values("A2", "B2", "A3", "A1+A1", "G2"));

TEST(MinCosetReps, Examples) {
  WeylGroup a2(CartanDatum::parse("A2"));
  EXPECT_EQ(a2.min_coset_reps({}).size(), 6u);
  std::vector<std::size_t> all{0, 1};
  EXPECT_EQ(a2.min_coset_reps(all), std::vector<WeylElement>{a2.identity()});
  std::vector<std::size_t> alpha{0};
  std::vector<WeylElement> expected{a2.identity(), w_of(a2, {1}),
                                    w_of(a2, {0, 1})};
  EXPECT_EQ(a2.min_coset_reps(alpha), expected);
}

TEST(MinInCoset, Examples) {
  WeylGroup a2(CartanDatum::parse("A2"));
  std::vector<WeylElement> trivial{a2.identity()};
  WeylElement w = w_of(a2, {0, 1});
  EXPECT_EQ(a2.min_in_coset(w, trivial), std::vector<WeylElement>{w});
  EXPECT_EQ(a2.min_in_coset(w, a2.elements()),
            std::vector<WeylElement>{a2.identity()});

  WeylGroup a1a1(CartanDatum::parse("A1+A1"));
  std::vector<WeylElement> diag{a1a1.identity(), w_of(a1a1, {0, 1})};
  std::vector<WeylElement> expected{a1a1.simple_reflection(0),
                                    a1a1.simple_reflection(1)};
  EXPECT_EQ(a1a1.min_in_coset(a1a1.simple_reflection(0), diag), expected);

  std::vector<WeylElement> not_subgroup{a2.identity(), a2.simple_reflection(0),
                                        a2.simple_reflection(1)};
  EXPECT_THROW(a2.min_in_coset(w, not_subgroup), Error);
}

TEST(BraidOrder, Examples) {
  EXPECT_EQ(WeylGroup(CartanDatum::parse("A2")).braid_order(0, 1), 3);
  EXPECT_EQ(WeylGroup(CartanDatum::parse("B2")).braid_order(0, 1), 4);
  EXPECT_EQ(WeylGroup(CartanDatum::parse("A1+A1")).braid_order(0, 1), 2);
  EXPECT_EQ(WeylGroup(CartanDatum::parse("G2")).braid_order(1, 0), 6);
  EXPECT_THROW(WeylGroup(CartanDatum::parse("A2")).braid_order(1, 1), Error);
}

TEST(BraidOrder, EqualsElementOrder) {
  for (const char* label : {"A3", "B3", "G2", "A1+A2"}) {
    WeylGroup weyl(CartanDatum::parse(label));
    for (std::size_t i = 0; i < weyl.rank(); ++i) {
      for (std::size_t j = 0; j < weyl.rank(); ++j) {
        if (i == j) continue;
        WeylElement p = weyl.multiply(weyl.simple_reflection(i),
                                      weyl.simple_reflection(j));
        int order = 1;
        for (WeylElement x = p; x != weyl.identity(); x = weyl.multiply(x, p)) {
          ++order;
        }
        EXPECT_EQ(weyl.braid_order(i, j), order) << label;
      }
    }
  }
}

TEST(Pairing, Examples) {
  CartanDatum a2 = CartanDatum::parse("A2");
  Weight alpha{{1, 0}, WeightBasis::kSimpleRoot};
  EXPECT_EQ(pairing(a2, alpha, 0), 2);
  EXPECT_EQ(pairing(a2, alpha, 1), -1);
  Weight omega{{1, 0}, WeightBasis::kFundamental};
  EXPECT_EQ(pairing(a2, omega, 0), 1);
  EXPECT_EQ(pairing(a2, omega, 1), 0);
}

TEST(Reflections, Counts) {
  WeylGroup a1(CartanDatum::parse("A1"));
  EXPECT_EQ(a1.reflections().size(), 1u);
  WeylGroup a2(CartanDatum::parse("A2"));
  EXPECT_EQ(a2.reflections().size(), 3u);
  EXPECT_EQ(a2.commuting_reflection_products().size(), 0u);
  WeylGroup a1a1(CartanDatum::parse("A1+A1"));
  EXPECT_EQ(a1a1.reflections().size(), 2u);
  EXPECT_EQ(a1a1.commuting_reflection_products().size(), 1u);
  WeylGroup b2(CartanDatum::parse("B2"));
  EXPECT_EQ(b2.reflections().size(), 4u);
  EXPECT_EQ(b2.commuting_reflection_products().size(), 2u);
}

TEST(Reflections, AreInvolutionsNegatingTheirRoot) {
  WeylGroup b3(CartanDatum::parse("B3"));
  for (RootId r : b3.positive_roots()) {
    WeylElement s = b3.reflection(r);
    EXPECT_EQ(b3.multiply(s, s), b3.identity());
    EXPECT_EQ(b3.apply(s, r), b3.negate(r));
  }
}

// Properties over every element of a handful of types.
class GroupProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(GroupProperties, AgreesWithMatrixOracle) {
  CartanDatum d = CartanDatum::parse(GetParam());
  WeylGroup weyl(d);
  auto lengths = oracle::shortest_lengths(d, weyl.length(weyl.longest()));
  EXPECT_EQ(lengths.size(), weyl.order());
  for (WeylElement w : weyl.elements()) {
    Matrix m = matrix_of(weyl, w);
    EXPECT_EQ(m, oracle::of_word(d, weyl.word(w)));
    EXPECT_EQ(lengths.at(m), weyl.length(w));
  }
}

TEST_P(GroupProperties, LengthChangesByOne) {
  WeylGroup weyl(CartanDatum::parse(GetParam()));
  for (WeylElement w : weyl.elements()) {
    std::size_t inversions = 0;
    for (RootId r : weyl.positive_roots()) {
      if (!weyl.is_positive(weyl.apply(w, r))) ++inversions;
    }
    EXPECT_EQ(inversions, weyl.length(w));
    EXPECT_EQ(weyl.word(w).size(), weyl.length(w));
    for (std::size_t i = 0; i < weyl.rank(); ++i) {
      WeylElement sw = weyl.multiply(weyl.simple_reflection(i), w);
      std::size_t a = weyl.length(sw);
      std::size_t b = weyl.length(w);
      EXPECT_EQ(a > b ? a - b : b - a, 1u);
    }
  }
}

TEST_P(GroupProperties, CanonicalWordsAreShortLexMinimal) {
  WeylGroup weyl(CartanDatum::parse(GetParam()));
  std::vector<WeylElement> all = weyl.elements();
  for (std::size_t k = 0; k < all.size(); ++k) {
    EXPECT_EQ(all[k].index(), k);
    EXPECT_EQ(weyl.from_word(weyl.word(all[k])), all[k]);
    if (k > 0) {
      const Word& a = weyl.word(all[k - 1]);
      const Word& b = weyl.word(all[k]);
      EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
    }
  }
}

TEST_P(GroupProperties, LongestElement) {
  WeylGroup weyl(CartanDatum::parse(GetParam()));
  WeylElement w0 = weyl.longest();
  EXPECT_EQ(weyl.multiply(w0, w0), weyl.identity());
  EXPECT_EQ(weyl.length(w0), weyl.positive_roots().size());
  std::set<RootId> image;
  for (std::size_t i = 0; i < weyl.rank(); ++i) {
    // -w0 permutes the simple roots.
    image.insert(weyl.negate(weyl.apply(w0, weyl.simple_root(i))));
  }
  std::set<RootId> simple;
  for (std::size_t i = 0; i < weyl.rank(); ++i) {
    simple.insert(weyl.simple_root(i));
  }
  EXPECT_EQ(image, simple);
}

TEST_P(GroupProperties, ParabolicDecomposition) {
  WeylGroup weyl(CartanDatum::parse(GetParam()));
  std::vector<std::vector<std::size_t>> subsets{{}, {0}};
  if (weyl.rank() > 1) subsets.push_back({1});
  std::vector<std::size_t> all(weyl.rank());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  subsets.push_back(all);
  for (const auto& subset : subsets) {
    auto reps = weyl.min_coset_reps(subset);
    auto parabolic = weyl.parabolic_subgroup(subset);
    for (WeylElement w : weyl.elements()) {
      int count = 0;
      for (WeylElement u : reps) {
        for (WeylElement v : parabolic) {
          if (weyl.multiply(u, v) == w &&
              weyl.length(u) + weyl.length(v) == weyl.length(w)) {
            ++count;
          }
        }
      }
      EXPECT_EQ(count, 1);
    }
    EXPECT_EQ(reps.size() * parabolic.size(), weyl.order());
  }
}

TEST_P(GroupProperties, RootActionIsBijectiveAndPreservesPairing) {
  WeylGroup weyl(CartanDatum::parse(GetParam()));
  for (WeylElement w : weyl.elements()) {
    std::set<RootId> image;
    for (RootId r = 0; r < weyl.root_count(); ++r) {
      image.insert(weyl.apply(w, r));
    }
    EXPECT_EQ(image.size(), weyl.root_count());
  }
  for (WeylElement w : {weyl.longest(), weyl.simple_reflection(0)}) {
    for (RootId r = 0; r < weyl.root_count(); ++r) {
      for (RootId s = 0; s < weyl.root_count(); ++s) {
        EXPECT_EQ(weyl.coroot_pairing(r, s),
                  weyl.coroot_pairing(weyl.apply(w, r), weyl.apply(w, s)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(RankAtMostFour, GroupProperties,
                         ::testing::Values("A1", "A2", "B2", "G2", "A3", "B3",
                                           "C3", "A1+A1", "A2+A1", "D4",
                                           "B4"));

TEST(Generate, SubgroupsAndIsSubgroup) {
  WeylGroup a2(CartanDatum::parse("A2"));
  std::vector<WeylElement> gens{a2.simple_reflection(0)};
  EXPECT_EQ(a2.generate(gens).size(), 2u);
  gens.push_back(a2.simple_reflection(1));
  auto all = a2.generate(gens);
  EXPECT_EQ(all.size(), 6u);
  EXPECT_TRUE(a2.is_subgroup(all));
}

TEST(Datum, RestrictionSumAndAutomorphisms) {
  CartanDatum a2 = CartanDatum::parse("A2");
  EXPECT_EQ(a2.diagram_automorphisms().size(), 2u);
  CartanDatum b2 = CartanDatum::parse("B2");
  EXPECT_EQ(b2.diagram_automorphisms().size(), 1u);
  std::vector<std::size_t> first{0};
  EXPECT_EQ(a2.restrict_to(first), CartanDatum::parse("A1"));
  CartanDatum doubled = a2 + a2;
  EXPECT_EQ(doubled.rank(), 4u);
  EXPECT_TRUE(doubled.orthogonal(0, 2));
  EXPECT_FALSE(doubled.orthogonal(2, 3));
  EXPECT_TRUE(CartanDatum::parse("A3").simply_laced());
  EXPECT_FALSE(b2.simply_laced());
}

}  // namespace
}  // namespace orbitweave
