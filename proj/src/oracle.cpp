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

#include <algorithm>
#include <bit>
#include <vector>

namespace trifree {

namespace {

// Plain include/exclude enumeration over a fixed pair order.
class Enumerator {
 public:
  Enumerator(int n, std::vector<Edge> pairs, std::vector<int> cap)
      : pairs_(std::move(pairs)), cap_(std::move(cap)), adj_(n, 0) {}

  template <typename Leaf>
  void run(int64_t start_edges, const std::vector<uint64_t>& start_adj, Leaf&& leaf) {
    adj_ = start_adj;
    edges_ = start_edges;
    recurse(0, leaf);
  }

  int64_t best = -1;

 private:
  template <typename Leaf>
  void recurse(size_t i, Leaf& leaf) {
    if (edges_ + addable(i) <= best) return;
    if (i == pairs_.size()) {
      if (leaf(adj_, edges_)) best = std::max(best, edges_);
      return;
    }
    const auto [u, v] = pairs_[i];
    const uint64_t bu = uint64_t{1} << u;
    const uint64_t bv = uint64_t{1} << v;
    if ((adj_[u] & adj_[v]) == 0 && std::popcount(adj_[u]) < cap_[u] &&
        std::popcount(adj_[v]) < cap_[v]) {
      adj_[u] |= bv;
      adj_[v] |= bu;
      ++edges_;
      recurse(i + 1, leaf);
      --edges_;
      adj_[u] &= ~bv;
      adj_[v] &= ~bu;
    }
    recurse(i + 1, leaf);
  }

  // Remaining pairs that could still be added on their own.
  int64_t addable(size_t from) const {
    int64_t count = 0;
    for (size_t k = from; k < pairs_.size(); ++k) {
      const auto [u, v] = pairs_[k];
      if ((adj_[u] & adj_[v]) == 0 && std::popcount(adj_[u]) < cap_[u] &&
          std::popcount(adj_[v]) < cap_[v]) {
        ++count;
      }
    }
    return count;
  }

  std::vector<Edge> pairs_;
  std::vector<int> cap_;
  std::vector<uint64_t> adj_;
  int64_t edges_ = 0;
};

Graph from_masks(const std::vector<uint64_t>& adj) {
  const int n = static_cast<int>(adj.size());
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((adj[u] >> v) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

std::pair<int64_t, Graph> brute_force_max(int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("brute_force_max needs n, d >= 0");
  if (n > kOracleMaxVertices) throw CapExceededError(n, kOracleMaxVertices);
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  Enumerator e(n, std::move(pairs), std::vector<int>(n, d));
  Graph witness(n);
  e.run(0, std::vector<uint64_t>(n, 0), [&](const std::vector<uint64_t>& adj, int64_t edges) {
    if (edges > e.best) witness = from_masks(adj);
    return true;
  });
  return {e.best, witness};
}

std::optional<std::pair<int64_t, Graph>> brute_force_under_node(
    const SearchNode& node, int d) {
  const int n = node.n();
  if (n > kOracleNodeMaxVertices) throw CapExceededError(n, kOracleNodeMaxVertices);
  std::vector<int> cap(n);
  std::vector<uint64_t> start(n, 0);
  for (int v = 0; v < n; ++v) {
    cap[v] = node.vertex_class(v) == VertexClass::kAtMostDMinus1 ? d - 1 : d;
    start[v] = node.ones(v);
  }
  // Fixed ones must already respect the triangle and degree rules.
  for (int v = 0; v < n; ++v) {
    if (std::popcount(start[v]) > cap[v]) return std::nullopt;
    for (int u = v + 1; u < n; ++u) {
      if (((start[v] >> u) & 1) && (start[u] & start[v])) return std::nullopt;
    }
  }
  std::vector<int> deficient;
  for (int v = n - 1; v >= 0; --v) {
    if (node.vertex_class(v) == VertexClass::kAtMostDMinus1) deficient.push_back(v);
  }
  Enumerator e(n, node.free_pairs(), cap);
  std::optional<std::pair<int64_t, Graph>> best;
  e.run(node.num_ones(), start, [&](const std::vector<uint64_t>& adj, int64_t edges) {
    for (int v = 0; v < n; ++v) {
      if (node.vertex_class(v) == VertexClass::kExactlyD && std::popcount(adj[v]) != d) {
        return false;
      }
    }
    if (node.degree_order_cut()) {
      for (size_t k = 1; k < deficient.size(); ++k) {
        if (std::popcount(adj[deficient[k]]) > std::popcount(adj[deficient[k - 1]])) {
          return false;
        }
      }
    }
    if (!best || edges > best->first) best.emplace(edges, from_masks(adj));
    return true;
  });
  return best;
}

}  // namespace trifree
