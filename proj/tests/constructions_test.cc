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

#include "trifree/constructions.hpp"

#include <algorithm>

#include "gtest/gtest.h"
#include "trifree/formula.hpp"
#include "trifree/knapsack.hpp"

namespace trifree {
namespace {

TEST(StarTest, Shape) {
  const Graph s = d_star(5);
  EXPECT_EQ(s.num_vertices(), 6);
  EXPECT_EQ(s.num_edges(), 5);
  EXPECT_EQ(s.degree(0), 5);
  EXPECT_EQ(max_matching(s).size(), 1);
}

TEST(GeneralBlockTest, EvenIsComplete) {
  const Graph b = general_block(4);
  EXPECT_EQ(b.num_vertices(), 5);
  EXPECT_EQ(b.num_edges(), 10);
}

TEST(GeneralBlockTest, OddDegreeBounded) {
  const Graph b = general_block(5);
  EXPECT_EQ(b.num_vertices(), 7);
  EXPECT_EQ(b.max_degree(), 5);
  EXPECT_EQ(max_matching(b).size(), 3);
}

TEST(GeneralExtremalTest, Examples) {
  EXPECT_EQ(general_extremal(2, 2).num_edges(), 6);
  EXPECT_EQ(general_extremal(3, 3).num_edges(), 10);
  EXPECT_EQ(general_extremal(1, 4).num_edges(), 4);
}

TEST(GeneralExtremalTest, MeetsFGen) {
  for (int d = 1; d <= 8; ++d) {
    for (int m = 1; m <= 12; ++m) {
      const Graph g = general_extremal(d, m);
      EXPECT_EQ(g.num_edges(), f_gen(d, m)) << d << "," << m;
      EXPECT_LE(g.max_degree(), d);
      EXPECT_EQ(max_matching(g).size(), m);
    }
  }
}

TEST(BGraphTest, BaseCaseIsSmall) {
  const Graph g = b_graph(2, 0);
  EXPECT_EQ(g.num_vertices(), 5);
  EXPECT_TRUE(is_triangle_free(g));
  EXPECT_EQ(g.num_edges(), f_delta(2, 2, false));
}

TEST(BGraphTest, Properties) {
  for (int d = 7; d <= 13; ++d) {
    const int z = z_of(d).value();
    for (int t = 0; t < z - d; ++t) {
      const Graph g = b_graph(d, t);
      const int nu = d + t;
      EXPECT_EQ(g.num_vertices(), 2 * nu + 1);
      EXPECT_TRUE(is_triangle_free(g)) << d << "," << t;
      EXPECT_LE(g.max_degree(), d);
      EXPECT_EQ(max_matching(g).size(), nu);
      EXPECT_TRUE(is_factor_critical(g));
      EXPECT_EQ(g.num_edges(), int64_t{d} * nu + t + 1) << d << "," << t;
      std::vector<int> degrees(2 * d + 2 * t, d);
      degrees.push_back(2 * t + 2);
      std::vector<int> got = g.degree_sequence();
      std::sort(degrees.begin(), degrees.end());
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, degrees) << d << "," << t;
    }
  }
}

TEST(BGraphTest, RejectsBadT) {
  EXPECT_THROW(b_graph(7, 2), InvalidTError);
  EXPECT_THROW(b_graph(6, 1), InvalidTError);
  EXPECT_THROW(b_graph(15, 1), InvalidTError);
  EXPECT_THROW(b_graph(8, -1), InvalidTError);
}

TEST(AssembleTest, StarsThenComponents) {
  KnapsackPlan plan;
  plan.d = 7;
  plan.m = 15;
  plan.counts = {{8, 1}};
  plan.star_count = 7;
  const Graph g = assemble(plan, {{8, b_graph(7, 1)}});
  EXPECT_EQ(g.num_edges(), 7 * 7 + 58);
  EXPECT_EQ(max_matching(g).size(), 15);
  EXPECT_EQ(g.degree(0), 7);
}

TEST(AssembleTest, MissingComponent) {
  KnapsackPlan plan;
  plan.d = 7;
  plan.m = 9;
  plan.counts = {{9, 1}};
  EXPECT_THROW(assemble(plan, {}), MissingComponentError);
}

}  // namespace
}  // namespace trifree
