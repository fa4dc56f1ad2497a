// Copyright 2026 The trifree Authors.
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

#include "trifree/symmetry.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "properties.hpp"
#include "trifree/oracle.hpp"
#include "trifree/search.hpp"

namespace trifree {
namespace {

Edge image(const Permutation& p, const Edge& e) { return Edge(p[e.u], p[e.v]); }

std::vector<size_t> sizes(const OrbitPartition& o) {
  std::vector<size_t> s;
  for (const auto& c : o.classes) s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

TEST(SymmetryTest, SymmetricGroupOnFiveVertices) {
  ColoredModel model(5);
  SymmetryStats stats;
  const auto gens = automorphism_generators(model, {}, &stats);
  EXPECT_TRUE(stats.complete);
  EXPECT_EQ(gens.size(), 4u);
  for (const auto& g : gens) EXPECT_TRUE(is_automorphism(model, g));
  const OrbitPartition o = orbits_from_generators(model, gens);
  ASSERT_EQ(o.classes.size(), 1u);
  EXPECT_EQ(o.classes[0].size(), 10u);
}

TEST(SymmetryTest, FixedPairSplitsOrbits) {
  ColoredModel model(5);
  model.set_color(0, 1, PairColor::kFixedOne);
  const OrbitPartition o = orbits(model);
  EXPECT_EQ(sizes(o), (std::vector<size_t>{3, 6}));
  EXPECT_EQ(o.num_pairs(), 9u);
}

TEST(SymmetryTest, VertexColorsRestrictTheGroup) {
  const std::vector<int> colors = {0, 0, 0, 1, 1};
  ColoredModel model(5, colors);
  const OrbitPartition o = orbits(model);
  EXPECT_EQ(sizes(o), (std::vector<size_t>{1, 3, 6}));
  Permutation swap_colors = {3, 4, 2, 0, 1};
  EXPECT_FALSE(is_automorphism(model, swap_colors));
}

TEST(SymmetryTest, RootOfSeventeen) {
  ColoredModel model(17);
  OrbitPartition o = orbits(model);
  EXPECT_EQ(sizes(o), (std::vector<size_t>{136}));
  model.set_color(0, 1, PairColor::kFixedOne);
  o = orbits(model);
  EXPECT_EQ(sizes(o), (std::vector<size_t>{30, 105}));
  EXPECT_EQ(o.representative(o.largest_class()), Edge(2, 3));
}

TEST(SymmetryTest, SingleFreePair) {
  ColoredModel model(3);
  model.set_color(0, 1, PairColor::kFixedOne);
  model.set_color(0, 2, PairColor::kFixedZero);
  const OrbitPartition o = orbits(model);
  ASSERT_EQ(o.classes.size(), 1u);
  EXPECT_EQ(o.classes[0], std::vector<Edge>{Edge(1, 2)});
}

TEST(SymmetryTest, RejectsBadPermutations) {
  ColoredModel model(3);
  EXPECT_FALSE(is_automorphism(model, {0, 0, 1}));
  EXPECT_FALSE(is_automorphism(model, {0, 1}));
  EXPECT_FALSE(is_automorphism(model, {0, 1, 3}));
  EXPECT_TRUE(is_automorphism(model, {2, 1, 0}));
}

TEST(SymmetryTest, BudgetStillGivesAutomorphisms) {
  ColoredModel model(20);
  SymmetryOptions opts;
  opts.node_budget = 3;
  SymmetryStats stats;
  const auto gens = automorphism_generators(model, opts, &stats);
  EXPECT_FALSE(stats.complete);
  for (const auto& g : gens) EXPECT_TRUE(is_automorphism(model, g));
}

struct RandomModel {
  SearchNode node;
  ColoredModel model;
};

RandomModel random_model(std::mt19937_64& rng, int n) {
  SearchNode node(n, VertexClass::kAtMostD);
  ColoredModel model(n);
  std::uniform_int_distribution<int> pick(0, 5);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int r = pick(rng);
      if (r == 0) {
        node.set_one(u, v);
        model.set_color(u, v, PairColor::kFixedOne);
      } else if (r == 1) {
        node.set_zero(u, v);
        model.set_color(u, v, PairColor::kFixedZero);
      }
    }
  }
  return {node, model};
}

TEST(SymmetryPropertyTest, GeneratorsPreserveClasses) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const RandomModel rm = random_model(rng, 4 + trial % 9);
    const auto gens = automorphism_generators(rm.model);
    const OrbitPartition o = orbits_from_generators(rm.model, gens);
    EXPECT_EQ(o.num_pairs(), rm.model.free_pairs().size());
    for (const auto& g : gens) {
      ASSERT_TRUE(is_automorphism(rm.model, g));
      for (const auto& cls : o.classes) {
        const std::set<Edge> members(cls.begin(), cls.end());
        for (const Edge& e : cls) EXPECT_TRUE(members.count(image(g, e)));
      }
    }
  }
}

TEST(SymmetryPropertyTest, GeneratorsPreserveFeasibility) {
  const properties::Outcome r = properties::orbital_soundness(200, 17);
  EXPECT_EQ(r.checked, 200);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

}  // namespace
}  // namespace trifree
