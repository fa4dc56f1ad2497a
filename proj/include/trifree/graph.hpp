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

#ifndef TRIFREE_GRAPH_HPP_
#define TRIFREE_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace trifree {

using Vertex = int;

// Unordered vertex pair, always stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1.
//
// Adjacency is kept as sorted neighbour lists so that disjoint unions with
// tens of thousands of vertices (knapsack assemblies) stay cheap. Hot loops
// that need bitsets (the search engine) build their own representation.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int64_t num_edges() const { return num_edges_; }

  // Adds {u,v}. Returns false if the edge was already present.
  // Throws std::invalid_argument on self-loops or out-of-range vertices.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  // Edges in lexicographic order.
  std::vector<Edge> edges() const;
  // Sorted degree sequence, ascending.
  std::vector<int> degree_sequence() const;

  // Graph with vertex v removed; vertices above v shift down by one.
  Graph without_vertex(Vertex v) const;

  // Connected components as sorted vertex lists, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const;
  // Induced subgraph relabelled to 0..k-1 in the order given.
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  int64_t num_edges_ = 0;
};

// Appends `b` after `a`, relabelling b's vertices by a.num_vertices().
Graph disjoint_union(const Graph& a, const Graph& b);

struct Matching {
  std::vector<Edge> pairs;
  int size() const { return static_cast<int>(pairs.size()); }
};

bool is_triangle_free(const Graph& g);

// Maximum cardinality matching (Edmonds' blossom algorithm), computed per
// connected component.
Matching max_matching(const Graph& g);

// True iff every pair is an edge of g and no vertex is covered twice.
bool is_matching_of(const Graph& g, const Matching& m);

bool is_factor_critical(const Graph& g);

}  // namespace trifree

#endif  // TRIFREE_GRAPH_HPP_
