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

// Branch-and-bound over the 0/1 edge variables of a graph on N = 2m+1
// vertices, maximising the edge count subject to triangle-freeness and
// per-vertex degree classes.
//
// Two drivers share one node engine:
//   * solve_basic: every vertex has degree at most d. Optionally branches on
//     symmetry orbits of free pairs (orbital branching).
//   * solve_iterative: vertices are split into V_d (degree exactly d) and
//     V_{d-1} (degree at most d-1). Starting from V_{d-1} empty, each round
//     solves the restricted problem, then moves one vertex to V_{d-1} and
//     lowers the global upper bound to max(floor(N*d/2 - |V_{d-1}|/2), LB)
//     until it meets the best solution found.

#ifndef TRIFREE_SEARCH_HPP_
#define TRIFREE_SEARCH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trifree/formula.hpp"
#include "trifree/graph.hpp"
#include "trifree/symmetry.hpp"

namespace trifree {

enum class VertexClass : uint8_t { kAtMostD, kExactlyD, kAtMostDMinus1 };

// Partial assignment: pairs fixed to one (F1), fixed to zero (F0), or free.
class SearchNode {
 public:
  SearchNode() = default;
  SearchNode(int n, VertexClass uniform);
  SearchNode(int n, const std::vector<VertexClass>& classes);

  int n() const { return n_; }
  int depth() const { return depth_; }
  void set_depth(int depth) { depth_ = depth; }

  VertexClass vertex_class(Vertex v) const { return class_[v]; }
  // Degree-ordering cut on V_{d-1}: taken in decreasing index order, the
  // final degrees of AtMostDMinus1 vertices are non-increasing.
  bool degree_order_cut() const { return order_cut_; }
  void set_degree_order_cut(bool on) { order_cut_ = on; }

  Mask ones(Vertex v) const { return one_[v]; }
  Mask zeros(Vertex v) const { return zero_[v]; }
  Mask free_mask(Vertex v) const;
  bool is_one(Vertex u, Vertex v) const { return (one_[u] >> v) & 1; }
  bool is_zero(Vertex u, Vertex v) const { return (zero_[u] >> v) & 1; }
  bool is_free(Vertex u, Vertex v) const;

  int degree(Vertex v) const;
  int free_degree(Vertex v) const;
  int num_ones() const;
  int num_free_pairs() const;

  // Raw setters; they do not propagate and do not check consistency.
  void set_one(Vertex u, Vertex v);
  void set_zero(Vertex u, Vertex v);

  std::vector<Edge> fixed_ones() const;
  std::vector<Edge> fixed_zeros() const;
  std::vector<Edge> free_pairs() const;
  Graph to_graph() const;  // the F1 pairs

  friend bool operator==(const SearchNode& a, const SearchNode& b);

 private:
  int n_ = 0;
  int depth_ = 0;
  bool order_cut_ = false;
  std::array<Mask, kMaxVertices> one_{};
  std::array<Mask, kMaxVertices> zero_{};
  std::array<VertexClass, kMaxVertices> class_{};
};

// Symmetry model of a node: pair colours from F0/F1, vertex colours from the
// degree class. Under the ordering cut each deficient vertex is its own colour.
ColoredModel to_colored_model(const SearchNode& node);

// Degree caps after applying the ordering cut, if enabled.
std::array<int, kMaxVertices> effective_caps(const SearchNode& node, int d);

// Fixed point of the triangle rule, degree saturation and forced completion
// of ExactlyD vertices. nullopt means the node has no feasible completion.
// With min_edges > 0 only completions with at least that many edges are
// kept, which raises per-vertex degree floors.
std::optional<SearchNode> propagate(const SearchNode& node, int d, int64_t min_edges = 0);

// |F1| + floor(sum_v min(cap(v) - deg(v), free_deg(v)) / 2).
int64_t bound(const SearchNode& node, int d);

// Root of the restricted problem used by one iterative round: the highest
// `deficient` indices are AtMostDMinus1, the rest ExactlyD.
SearchNode iterative_root(int n, int deficient, bool order_cut);

enum class Method { kBasic, kOrbital, kIterative, kIterativeOrbital, kOracle };
enum class BranchRule { kMaxOrbit, kMaxSaturationLex };
// Single-pair rule used below the orbit cutoff.
enum class PairRule { kMaxSaturationLex, kFirstFail };
enum class SolveStatus { kOptimal, kTimeLimit, kInfeasible };

struct OrbitDepthCutoff {
  enum class Kind { kAdaptive, kFixed, kOff };
  Kind kind = Kind::kAdaptive;
  int depth = 0;  // used by kFixed

  static OrbitDepthCutoff Adaptive() { return {Kind::kAdaptive, 0}; }
  static OrbitDepthCutoff Fixed(int k) { return {Kind::kFixed, k}; }
  static OrbitDepthCutoff Off() { return {Kind::kOff, 0}; }
};

struct SolverConfig {
  Method method = Method::kIterativeOrbital;
  double time_limit_s = 3600.0;
  OrbitDepthCutoff orbit_depth_cutoff = OrbitDepthCutoff::Adaptive();
  BranchRule branch_rule = BranchRule::kMaxOrbit;
  PairRule pair_rule = PairRule::kMaxSaturationLex;
  int workers = 1;
  bool deterministic = true;
  bool degree_order_cut = true;
  int64_t symmetry_node_budget = 20000;
  // Shuffles the order in which parallel workers pick up subtrees; 0 keeps
  // the breadth-first order. Ignored when deterministic.
  uint64_t seed = 0;
};

struct SolveStats {
  int64_t nodes = 0;
  double wall_s = 0.0;
  double orbit_s = 0.0;
  int64_t orbit_calls = 0;
  int orbit_depth_limit = -1;  // -1: never triggered
  // Upper bound after each iterative round (index 0 is the initial value).
  std::vector<int64_t> iterative_ubs;
  // Per-round optimum, -1 when the round was infeasible or aborted.
  std::vector<int64_t> iterative_round_values;
};

struct SolveResult {
  int64_t lb = 0;
  int64_t ub = 0;
  std::optional<Graph> incumbent;
  SolveStatus status = SolveStatus::kTimeLimit;
  SolveStats stats;
};

// Engine entry point for one restricted problem: maximises over completions
// of `root`, only reporting solutions with more than `lower_bound` edges
// (-1 accepts the empty graph).
// Used directly by tests and by both drivers.
SolveResult solve_node(const SearchNode& root, int d, const SolverConfig& cfg,
                       int64_t lower_bound = -1);

SolveResult solve_basic(const Instance& inst, const SolverConfig& cfg);
SolveResult solve_iterative(const Instance& inst, const SolverConfig& cfg);
SolveResult solve(const Instance& inst, const SolverConfig& cfg);

// floor(N*d/2 - deficient/2).
int64_t iterative_upper_bound(int n, int d, int deficient);

std::string to_string(Method m);
std::string to_string(SolveStatus s);
std::string to_string(BranchRule r);
std::string to_string(PairRule r);
std::string to_string(const OrbitDepthCutoff& c);
Method method_from_string(const std::string& s);
BranchRule branch_rule_from_string(const std::string& s);
PairRule pair_rule_from_string(const std::string& s);
OrbitDepthCutoff orbit_cutoff_from_string(const std::string& s);
SolveStatus status_from_string(const std::string& s);

}  // namespace trifree

#endif  // TRIFREE_SEARCH_HPP_
