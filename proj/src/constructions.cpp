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

#include <vector>

#include "trifree/formula.hpp"
#include "trifree/knapsack.hpp"

namespace trifree {

namespace {

// Appends `count` copies of `piece` to the edge list, starting at `offset`.
int append_copies(std::vector<Edge>& edges, int offset, const Graph& piece,
                  int64_t count) {
  const std::vector<Edge> local = piece.edges();
  for (int64_t c = 0; c < count; ++c) {
    for (const Edge& e : local) edges.emplace_back(e.u + offset, e.v + offset);
    offset += piece.num_vertices();
  }
  return offset;
}

}  // namespace

Graph d_star(int d) {
  if (d < 1) throw std::invalid_argument("d_star needs d >= 1");
  Graph g(d + 1);
  for (Vertex leaf = 1; leaf <= d; ++leaf) g.add_edge(0, leaf);
  return g;
}

Graph general_block(int d) {
  if (d < 1) throw std::invalid_argument("general_block needs d >= 1");
  if (d % 2 == 0) {
    Graph g(d + 1);
    for (Vertex u = 0; u <= d; ++u) {
      for (Vertex v = u + 1; v <= d; ++v) g.add_edge(u, v);
    }
    return g;
  }
  Graph g(d + 2);
  for (Vertex u = 0; u <= d; ++u) {
    for (Vertex v = u + 1; v <= d; ++v) {
      if (u % 2 == 0 && v == u + 1) continue;
      g.add_edge(u, v);
    }
  }
  for (Vertex v = 0; v < d; ++v) g.add_edge(d + 1, v);
  return g;
}

Graph general_extremal(int d, int m) {
  if (d < 1 || m < 1) {
    throw std::invalid_argument("general_extremal needs d >= 1, m >= 1");
  }
  const int per_block = (d + 1) / 2;
  const int q = m / per_block;
  const int r = m - q * per_block;
  const Graph block = general_block(d);
  const Graph star = d_star(d);
  std::vector<Edge> edges;
  int n = append_copies(edges, 0, block, q);
  n = append_copies(edges, n, star, r);
  return Graph(n, edges);
}

Graph b_graph(int d, int t) {
  if (d < 2) throw InvalidTError("b_graph needs d >= 2");
  if (t < 0) throw InvalidTError("b_graph needs t >= 0");
  if (t > 0) {
    if (d < 7) throw InvalidTError("b_graph with t > 0 needs d >= 7");
    const ZValue z = z_of(d);
    if (!z.exact()) {
      throw InvalidTError("b_graph: Z(" + std::to_string(d) + ") unknown");
    }
    if (t >= z.value() - d) {
      throw InvalidTError("b_graph: t=" + std::to_string(t) +
                          " must be < Z(d)-d=" + std::to_string(z.value() - d));
    }
  }
  const int side = d + t;
  const int f = d - 1;
  const Vertex apex = 2 * side;
  auto left = [](int i) { return i; };
  auto right = [side](int i) { return side + i; };

  Graph g(2 * side + 1);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const bool i_in_h = i >= f;
      const bool j_in_h = j >= f;
      if (i_in_h && j_in_h) continue;
      if (!i_in_h && !j_in_h) {
        const int shift = ((j - i) % f + f) % f;
        if (shift < t) continue;
      }
      g.add_edge(left(i), right(j));
    }
  }
  for (int i = f; i < side; ++i) {
    g.add_edge(apex, left(i));
    g.add_edge(apex, right(i));
  }
  return g;
}

Graph assemble(const KnapsackPlan& plan,
               const std::map<int, Graph>& component_graphs) {
  std::vector<Edge> edges;
  int n = 0;
  if (plan.star_count > 0) n = append_copies(edges, n, d_star(plan.d), plan.star_count);
  for (const auto& [nu, count] : plan.counts) {
    if (count == 0) continue;
    auto it = component_graphs.find(nu);
    if (it == component_graphs.end()) throw MissingComponentError(nu);
    n = append_copies(edges, n, it->second, count);
  }
  return Graph(n, edges);
}

}  // namespace trifree
