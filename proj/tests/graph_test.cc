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

#include "trifree/graph.hpp"

#include <random>

#include "gtest/gtest.h"
#include "properties.hpp"
#include "test_util.hpp"
#include "trifree/constructions.hpp"
#include "trifree/graph6.hpp"

namespace trifree {
namespace {

using testing::complete;
using testing::cycle;
using testing::random_graph;

TEST(GraphTest, EdgesAreStoredOnce) {
  Graph g(4);
  EXPECT_TRUE(g.add_edge(2, 1));
  EXPECT_FALSE(g.add_edge(1, 2));
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(g.degree(1), 1);
  EXPECT_EQ(g.edges(), std::vector<Edge>{Edge(1, 2)});
}

TEST(GraphTest, RejectsLoopsAndOutOfRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
  EXPECT_THROW(g.add_edge(-1, 0), std::invalid_argument);
}

TEST(GraphTest, DegreesMatchStoredPairs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(12, 0.4, rng);
    std::vector<int> count(12, 0);
    for (const Edge& e : g.edges()) {
      ++count[e.u];
      ++count[e.v];
    }
    for (Vertex v = 0; v < 12; ++v) EXPECT_EQ(g.degree(v), count[v]);
  }
}

TEST(TriangleTest, Examples) {
  EXPECT_TRUE(is_triangle_free(cycle(5)));
  EXPECT_FALSE(is_triangle_free(complete(3)));
  EXPECT_FALSE(testing::has_triangle_brute(b_graph(7, 1)));
  EXPECT_TRUE(is_triangle_free(b_graph(7, 1)));
}

TEST(TriangleTest, AgreesWithTripleScan) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(9, 0.3, rng);
    EXPECT_EQ(is_triangle_free(g), !testing::has_triangle_brute(g));
  }
}

TEST(MatchingTest, Examples) {
  EXPECT_EQ(max_matching(cycle(5)).size(), 2);
  EXPECT_EQ(max_matching(Graph(4)).size(), 0);
  EXPECT_EQ(max_matching(b_graph(7, 1)).size(), 8);
  EXPECT_EQ(max_matching(b_graph(9, 2)).size(), 11);
}

TEST(MatchingTest, BlossomNeeded) {
  // Two triangles joined by a path: greedy augmenting without blossom
  // shrinking gets stuck on the odd cycles.
  Graph g(8);
  for (auto [u, v] : std::vector<std::pair<int, int>>{
           {0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}}) {
    g.add_edge(u, v);
  }
  const Matching m = max_matching(g);
  EXPECT_EQ(m.size(), 4);
  EXPECT_TRUE(is_matching_of(g, m));
}

TEST(MatchingTest, AgreesWithBruteForceOnRandomGraphs) {
  const properties::Outcome r = properties::matching_vs_brute(200, 2024);
  EXPECT_EQ(r.checked, 200);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(MatchingTest, IsMatchingOfRejectsBadSets) {
  const Graph g = cycle(5);
  EXPECT_FALSE(is_matching_of(g, Matching{{Edge(0, 1), Edge(1, 2)}}));
  EXPECT_FALSE(is_matching_of(g, Matching{{Edge(0, 2)}}));
  EXPECT_TRUE(is_matching_of(g, Matching{{Edge(0, 1), Edge(2, 3)}}));
}

TEST(FactorCriticalTest, Examples) {
  EXPECT_TRUE(is_factor_critical(cycle(5)));
  EXPECT_TRUE(is_factor_critical(complete(3)));
  EXPECT_FALSE(is_factor_critical(cycle(6)));
  EXPECT_FALSE(is_factor_critical(d_star(3)));
  EXPECT_TRUE(is_factor_critical(b_graph(7, 1)));
  // Two disjoint 5-cycles: odd count fails, and so does connectivity.
  EXPECT_FALSE(is_factor_critical(disjoint_union(cycle(5), cycle(5))));
  EXPECT_FALSE(is_factor_critical(disjoint_union(cycle(5), Graph(2))));
}

TEST(FactorCriticalTest, ImpliesOddAndNearPerfect) {
  std::mt19937_64 rng(5);
  int seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(1 + 2 * (trial % 5), 0.5, rng);
    if (!is_factor_critical(g)) continue;
    ++seen;
    EXPECT_EQ(g.num_vertices() % 2, 1);
    EXPECT_EQ(max_matching(g).size(), (g.num_vertices() - 1) / 2);
  }
  EXPECT_GT(seen, 10);
}

TEST(GraphTest, ComponentsAndUnion) {
  const Graph g = disjoint_union(cycle(5), complete(3));
  EXPECT_EQ(g.num_vertices(), 8);
  EXPECT_EQ(g.num_edges(), 8);
  EXPECT_TRUE(g.has_edge(5, 7));
  const auto comps = g.components();
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[1], (std::vector<Vertex>{5, 6, 7}));
  EXPECT_EQ(g.induced(comps[1]), complete(3));
  EXPECT_EQ(cycle(5).without_vertex(0).num_edges(), 3);
}

TEST(Graph6Test, KnownCodes) {
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  EXPECT_EQ(from_graph6("?"), Graph(0));
  EXPECT_EQ(to_graph6(cycle(5)), "Dhc");
  EXPECT_EQ(from_graph6(">>graph6<<Dhc\n"), cycle(5));
}

TEST(Graph6Test, RoundTripRandom) {
  std::mt19937_64 rng(99);
  for (int n : {0, 1, 2, 20, 62, 63, 100}) {
    const Graph g = random_graph(n, 0.3, rng);
    const std::string code = to_graph6(g);
    EXPECT_EQ(from_graph6(code), g) << "n=" << n;
    if (n >= 63) EXPECT_EQ(code[0], '~');
  }
}

TEST(Graph6Test, MalformedInputReportsOffset) {
  try {
    from_graph6("Dh");
    FAIL() << "expected Graph6Error";
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  try {
    from_graph6("D h");
    FAIL() << "expected Graph6Error";
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(from_graph6("Dhcc"), Graph6Error);
  EXPECT_THROW(from_graph6("Dhd"), Graph6Error);  // padding bit set
  EXPECT_THROW(from_graph6(""), Graph6Error);
}

}  // namespace
}  // namespace trifree
