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
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace trifree {

namespace {

inline Mask bit(Vertex v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Vertex lowest(Mask m) { return std::countr_zero(m); }

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Ordered partition of the vertex set; cells are bitmasks.
using Partition = std::vector<Mask>;

class Refiner {
 public:
  explicit Refiner(const ColoredModel& model) : model_(model) {}

  Partition initial() const {
    std::map<int, Mask> by_color;
    for (Vertex v = 0; v < model_.n(); ++v) by_color[model_.vertex_color(v)] |= bit(v);
    Partition p;
    for (const auto& [color, cell] : by_color) p.push_back(cell);
    return p;
  }

  // Splits cells by (FixedOne count, FixedZero count) into every cell until
  // the partition is equitable. Sub-cells are ordered by signature, so the
  // result commutes with relabelling.
  void refine(Partition& p) const {
    for (;;) {
      Partition out;
      out.reserve(model_.n());
      bool split = false;
      for (Mask cell : p) {
        if (popcount(cell) == 1) {
          out.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<uint8_t>, Vertex>> sigs;
        for (Mask rest = cell; rest; rest &= rest - 1) {
          const Vertex v = lowest(rest);
          std::vector<uint8_t> s;
          s.reserve(2 * p.size());
          for (Mask other : p) {
            s.push_back(static_cast<uint8_t>(popcount(model_.ones(v) & other)));
            s.push_back(static_cast<uint8_t>(popcount(model_.zeros(v) & other)));
          }
          sigs.emplace_back(std::move(s), v);
        }
        std::sort(sigs.begin(), sigs.end());
        Mask current = 0;
        for (size_t i = 0; i < sigs.size(); ++i) {
          if (i > 0 && sigs[i].first != sigs[i - 1].first) {
            out.push_back(current);
            current = 0;
            split = true;
          }
          current |= bit(sigs[i].second);
        }
        out.push_back(current);
      }
      p = std::move(out);
      if (!split) return;
    }
  }

  // Cell sizes plus the quotient matrix of an equitable partition.
  std::vector<uint8_t> invariant(const Partition& p) const {
    std::vector<uint8_t> inv;
    inv.reserve(p.size() * (2 * p.size() + 1));
    for (Mask cell : p) {
      const Vertex v = lowest(cell);
      inv.push_back(static_cast<uint8_t>(popcount(cell)));
      for (Mask other : p) {
        inv.push_back(static_cast<uint8_t>(popcount(model_.ones(v) & other)));
        inv.push_back(static_cast<uint8_t>(popcount(model_.zeros(v) & other)));
      }
    }
    return inv;
  }

 private:
  const ColoredModel& model_;
};

bool discrete(const Partition& p, int n) { return static_cast<int>(p.size()) == n; }

int target_cell(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (popcount(p[i]) > 1) return static_cast<int>(i);
  }
  return -1;
}

Partition individualize(const Partition& p, int cell, Vertex v) {
  Partition out;
  out.reserve(p.size() + 1);
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (i == cell) {
      out.push_back(bit(v));
      out.push_back(p[i] & ~bit(v));
    } else {
      out.push_back(p[i]);
    }
  }
  return out;
}

struct Level {
  Partition cells;
  std::vector<uint8_t> invariant;
  int target = -1;
  Vertex chosen = -1;
};

class GeneratorSearch {
 public:
  GeneratorSearch(const ColoredModel& model, const SymmetryOptions& options)
      : model_(model), refiner_(model), options_(options) {}

  std::vector<Permutation> run(SymmetryStats* stats) {
    const int n = model_.n();
    std::vector<Permutation> gens;
    if (n <= 1) return gens;

    Partition p = refiner_.initial();
    refiner_.refine(p);
    for (;;) {
      Level level{p, refiner_.invariant(p), -1, -1};
      if (discrete(p, n)) {
        levels_.push_back(std::move(level));
        break;
      }
      level.target = target_cell(p);
      level.chosen = lowest(p[level.target]);
      p = individualize(p, level.target, level.chosen);
      refiner_.refine(p);
      levels_.push_back(std::move(level));
    }
    for (Mask cell : levels_.back().cells) first_leaf_.push_back(lowest(cell));

    UnionFind orbit(n);
    for (int depth = static_cast<int>(levels_.size()) - 2; depth >= 0; --depth) {
      const Level& level = levels_[depth];
      const Vertex v = level.chosen;
      for (Mask rest = level.cells[level.target]; rest; rest &= rest - 1) {
        const Vertex w = lowest(rest);
        if (w == v || orbit.find(w) == orbit.find(v)) continue;
        if (out_of_budget()) break;
        Partition q = individualize(level.cells, level.target, w);
        refiner_.refine(q);
        ++nodes_;
        if (refiner_.invariant(q) != levels_[depth + 1].invariant) continue;
        Permutation found;
        if (explore(depth + 1, q, found)) {
          for (Vertex x = 0; x < n; ++x) orbit.unite(x, found[x]);
          gens.push_back(std::move(found));
        }
      }
    }
    if (stats != nullptr) {
      stats->search_nodes += nodes_;
      stats->complete = stats->complete && !exhausted_;
    }
    return gens;
  }

 private:
  bool out_of_budget() {
    if (nodes_ >= options_.node_budget) exhausted_ = true;
    return exhausted_;
  }

  bool explore(size_t depth, const Partition& q, Permutation& found) {
    const int n = model_.n();
    if (discrete(q, n)) {
      Permutation perm(n);
      for (int i = 0; i < n; ++i) perm[first_leaf_[i]] = lowest(q[i]);
      if (is_automorphism(model_, perm)) {
        found = std::move(perm);
        return true;
      }
      return false;
    }
    const int t = levels_[depth].target;
    for (Mask rest = q[t]; rest; rest &= rest - 1) {
      if (out_of_budget()) return false;
      Partition next = individualize(q, t, lowest(rest));
      refiner_.refine(next);
      ++nodes_;
      if (refiner_.invariant(next) != levels_[depth + 1].invariant) continue;
      if (explore(depth + 1, next, found)) return true;
    }
    return false;
  }

  const ColoredModel& model_;
  Refiner refiner_;
  SymmetryOptions options_;
  std::vector<Level> levels_;
  std::vector<Vertex> first_leaf_;
  int64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

ColoredModel::ColoredModel(int n)
    : n_(n), vertex_color_(n, 0), one_(n, 0), zero_(n, 0) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("ColoredModel supports 0..64 vertices");
  }
}

ColoredModel::ColoredModel(int n, std::span<const int> vertex_color)
    : ColoredModel(n) {
  if (static_cast<int>(vertex_color.size()) != n) {
    throw std::invalid_argument("vertex colour count does not match n");
  }
  vertex_color_.assign(vertex_color.begin(), vertex_color.end());
}

PairColor ColoredModel::color(Vertex u, Vertex v) const {
  if (one_[u] & bit(v)) return PairColor::kFixedOne;
  if (zero_[u] & bit(v)) return PairColor::kFixedZero;
  return PairColor::kFree;
}

void ColoredModel::set_color(Vertex u, Vertex v, PairColor c) {
  if (u == v) throw std::invalid_argument("pair colour on a loop");
  one_[u] &= ~bit(v);
  one_[v] &= ~bit(u);
  zero_[u] &= ~bit(v);
  zero_[v] &= ~bit(u);
  if (c == PairColor::kFixedOne) {
    one_[u] |= bit(v);
    one_[v] |= bit(u);
  } else if (c == PairColor::kFixedZero) {
    zero_[u] |= bit(v);
    zero_[v] |= bit(u);
  }
}

std::vector<Edge> ColoredModel::free_pairs() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (color(u, v) == PairColor::kFree) out.emplace_back(u, v);
    }
  }
  return out;
}

size_t OrbitPartition::largest_class() const {
  size_t best = 0;
  for (size_t i = 1; i < classes.size(); ++i) {
    if (classes[i].size() > classes[best].size()) best = i;
  }
  return best;
}

size_t OrbitPartition::num_pairs() const {
  size_t total = 0;
  for (const auto& c : classes) total += c.size();
  return total;
}

bool is_automorphism(const ColoredModel& model, const Permutation& p) {
  const int n = model.n();
  if (static_cast<int>(p.size()) != n) return false;
  Mask seen = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (p[v] < 0 || p[v] >= n || (seen & bit(p[v]))) return false;
    seen |= bit(p[v]);
    if (model.vertex_color(v) != model.vertex_color(p[v])) return false;
  }
  auto image = [&](Mask m) {
    Mask out = 0;
    for (; m; m &= m - 1) out |= bit(p[lowest(m)]);
    return out;
  };
  for (Vertex v = 0; v < n; ++v) {
    if (image(model.ones(v)) != model.ones(p[v])) return false;
    if (image(model.zeros(v)) != model.zeros(p[v])) return false;
  }
  return true;
}

std::vector<Permutation> automorphism_generators(const ColoredModel& model,
                                                 const SymmetryOptions& options,
                                                 SymmetryStats* stats) {
  return GeneratorSearch(model, options).run(stats);
}

OrbitPartition orbits_from_generators(const ColoredModel& model,
                                      std::span<const Permutation> generators) {
  const int n = model.n();
  UnionFind uf(n * n);
  auto index = [n](Vertex a, Vertex b) { return a < b ? a * n + b : b * n + a; };
  const std::vector<Edge> pairs = model.free_pairs();
  for (const Permutation& g : generators) {
    for (const Edge& e : pairs) uf.unite(index(e.u, e.v), index(g[e.u], g[e.v]));
  }
  std::map<int, std::vector<Edge>> grouped;
  for (const Edge& e : pairs) grouped[uf.find(index(e.u, e.v))].push_back(e);
  OrbitPartition out;
  for (auto& [root, members] : grouped) out.classes.push_back(std::move(members));
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

OrbitPartition orbits(const ColoredModel& model, const SymmetryOptions& options,
                      SymmetryStats* stats) {
  const std::vector<Permutation> gens = automorphism_generators(model, options, stats);
  return orbits_from_generators(model, gens);
}

}  // namespace trifree
