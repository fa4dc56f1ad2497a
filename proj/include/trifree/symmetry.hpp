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

// Symmetries of a partially fixed edge model.
//
// The model is the complete graph on N vertices whose pairs are coloured
// FixedOne, FixedZero or Free, together with a vertex colouring. A vertex
// permutation that preserves both colourings maps feasible completions of
// the node to feasible completions with the same edge count, so the orbits
// of Free pairs under such permutations are valid branching orbits.
//
// Generators are found nauty-style: equitable colour refinement, then a
// first path of individualisations, then for each level a search for
// automorphisms mapping the first-path vertex to each other vertex of its
// cell that is not yet known to be in its orbit. The per-call search budget
// caps the cost; when it runs out the generators found so far still
// generate a subgroup, which is all orbital branching needs.

#ifndef TRIFREE_SYMMETRY_HPP_
#define TRIFREE_SYMMETRY_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

using Mask = uint64_t;
inline constexpr int kMaxVertices = 64;

enum class PairColor : uint8_t { kFree, kFixedOne, kFixedZero };

class ColoredModel {
 public:
  explicit ColoredModel(int n);
  ColoredModel(int n, std::span<const int> vertex_color);

  int n() const { return n_; }
  int vertex_color(Vertex v) const { return vertex_color_[v]; }
  void set_vertex_color(Vertex v, int color) { vertex_color_[v] = color; }

  PairColor color(Vertex u, Vertex v) const;
  void set_color(Vertex u, Vertex v, PairColor c);

  Mask ones(Vertex v) const { return one_[v]; }
  Mask zeros(Vertex v) const { return zero_[v]; }
  std::vector<Edge> free_pairs() const;

 private:
  int n_;
  std::vector<int> vertex_color_;
  std::vector<Mask> one_;
  std::vector<Mask> zero_;
};

using Permutation = std::vector<Vertex>;

struct OrbitPartition {
  // Each class is sorted; classes are ordered by their first pair.
  std::vector<std::vector<Edge>> classes;

  const Edge& representative(size_t i) const { return classes[i].front(); }
  size_t largest_class() const;
  size_t num_pairs() const;
};

struct SymmetryOptions {
  // Upper bound on refinement calls spent searching for automorphisms.
  int64_t node_budget = 20000;
};

struct SymmetryStats {
  int64_t search_nodes = 0;
  bool complete = true;  // false when the budget ran out
};

bool is_automorphism(const ColoredModel& model, const Permutation& p);

std::vector<Permutation> automorphism_generators(
    const ColoredModel& model, const SymmetryOptions& options = {},
    SymmetryStats* stats = nullptr);

OrbitPartition orbits_from_generators(const ColoredModel& model,
                                      std::span<const Permutation> generators);

OrbitPartition orbits(const ColoredModel& model,
                      const SymmetryOptions& options = {},
                      SymmetryStats* stats = nullptr);

}  // namespace trifree

#endif  // TRIFREE_SYMMETRY_HPP_
