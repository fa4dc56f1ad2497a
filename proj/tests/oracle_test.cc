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

#include "trifree/oracle.hpp"

#include "gtest/gtest.h"

namespace trifree {
namespace {

void expect_witness(const Graph& g, int64_t edges, int n, int d) {
  EXPECT_EQ(g.num_vertices(), n);
  EXPECT_EQ(g.num_edges(), edges);
  EXPECT_TRUE(is_triangle_free(g));
  EXPECT_LE(g.max_degree(), d);
}

TEST(OracleTest, SmallMaxima) {
  const auto [c5, g5] = brute_force_max(5, 2);
  EXPECT_EQ(c5, 5);
  expect_witness(g5, 5, 5, 2);
  const auto [k23, g23] = brute_force_max(5, 4);
  EXPECT_EQ(k23, 6);
  expect_witness(g23, 6, 5, 4);
  const auto [a, ga] = brute_force_max(7, 3);
  EXPECT_EQ(a, 10);
  expect_witness(ga, 10, 7, 3);
  EXPECT_EQ(brute_force_max(0, 3).first, 0);
  EXPECT_EQ(brute_force_max(4, 1).first, 2);
}

TEST(OracleTest, CapExceeded) {
  EXPECT_THROW(brute_force_max(12, 2), CapExceededError);
  EXPECT_THROW(brute_force_under_node(SearchNode(10, VertexClass::kAtMostD), 3),
               CapExceededError);
  try {
    brute_force_max(40, 2);
  } catch (const CapExceededError& e) {
    EXPECT_EQ(e.n(), 40);
  }
}

TEST(OracleNodeTest, RespectsFixings) {
  SearchNode node(5, VertexClass::kAtMostD);
  EXPECT_EQ(brute_force_under_node(node, 2)->first, 5);
  node.set_zero(0, 1);
  node.set_zero(0, 2);
  node.set_zero(0, 3);
  const auto r = brute_force_under_node(node, 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first, 4);
  EXPECT_FALSE(r->second.has_edge(0, 1));
}

TEST(OracleNodeTest, FixedTriangleIsInfeasible) {
  SearchNode node(5, VertexClass::kAtMostD);
  node.set_one(0, 1);
  node.set_one(1, 2);
  node.set_one(0, 2);
  EXPECT_FALSE(brute_force_under_node(node, 3).has_value());
}

TEST(OracleNodeTest, ExactDegrees) {
  // Five vertices, each of degree exactly 2: only the 5-cycle.
  const SearchNode cyc(5, VertexClass::kExactlyD);
  const auto r = brute_force_under_node(cyc, 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first, 5);
  // Odd degree sum cannot be met.
  EXPECT_FALSE(brute_force_under_node(SearchNode(5, VertexClass::kExactlyD), 3));
}

TEST(OracleNodeTest, OrderCutOnDeficientVertices) {
  SearchNode node = iterative_root(5, 2, true);
  const auto r = brute_force_under_node(node, 2);
  ASSERT_TRUE(r);
  const Graph& g = r->second;
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_LE(g.degree(4), 1);
  EXPECT_LE(g.degree(3), g.degree(4));
}

}  // namespace
}  // namespace trifree
