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

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace trifree {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  const int n = num_vertices();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "} out of range for n=" +
                                std::to_string(n));
  }
  if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++num_edges_;
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    return false;
  }
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degs;
  degs.reserve(adj_.size());
  for (const auto& a : adj_) degs.push_back(static_cast<int>(a.size()));
  std::sort(degs.begin(), degs.end());
  return degs;
}

Graph Graph::without_vertex(Vertex v) const {
  Graph out(num_vertices() - 1);
  auto relabel = [v](Vertex x) { return x < v ? x : x - 1; };
  for (const Edge& e : edges()) {
    if (e.u == v || e.v == v) continue;
    out.add_edge(relabel(e.u), relabel(e.v));
  }
  return out;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  const int n = num_vertices();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : adj_[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> index(num_vertices(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    index[vertices[i]] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(vertices.size()));
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex y : adj_[vertices[i]]) {
      const int j = index[y];
      if (j > static_cast<int>(i)) out.add_edge(static_cast<int>(i), j);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int off = a.num_vertices();
  Graph out(off + b.num_vertices());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + off, e.v + off);
  return out;
}

bool is_triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const auto& nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      const auto& nv = g.neighbors(v);
      // Sorted-list intersection.
      auto i = nu.begin();
      auto j = nv.begin();
      while (i != nu.end() && j != nv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Edmonds' blossom algorithm on a small connected graph, BFS from each
// exposed vertex with blossom contraction via base labels. O(V^3).
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.num_vertices()),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_) {}

  std::vector<int> run() {
    // Greedy warm start.
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      Vertex v = find_path(root);
      while (v != -1) {
        Vertex pv = parent_[v];
        Vertex ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return match_;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = 1;
      blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          Vertex cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

}  // namespace

Matching max_matching(const Graph& g) {
  Matching out;
  for (const auto& comp : g.components()) {
    if (comp.size() < 2) continue;
    Graph sub = g.induced(comp);
    std::vector<int> mate = Blossom(sub).run();
    for (int i = 0; i < static_cast<int>(mate.size()); ++i) {
      if (mate[i] > i) out.pairs.emplace_back(comp[i], comp[mate[i]]);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

bool is_matching_of(const Graph& g, const Matching& m) {
  std::vector<char> covered(g.num_vertices(), 0);
  for (const Edge& e : m.pairs) {
    if (!g.has_edge(e.u, e.v)) return false;
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = 1;
  }
  return true;
}

bool is_factor_critical(const Graph& g) {
  const int n = g.num_vertices();
  if (n % 2 == 0) return false;
  if (n == 1) return true;
  // Factor-critical graphs with more than one vertex are connected.
  if (g.components().size() != 1) return false;
  const int target = (n - 1) / 2;
  for (Vertex v = 0; v < n; ++v) {
    if (max_matching(g.without_vertex(v)).size() != target) return false;
  }
  return true;
}

}  // namespace trifree
