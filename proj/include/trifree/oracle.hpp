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

// Exhaustive reference solvers for tiny instances. They share no code with
// the branch-and-bound engine beyond the graph type.

#ifndef TRIFREE_ORACLE_HPP_
#define TRIFREE_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "trifree/graph.hpp"
#include "trifree/search.hpp"

namespace trifree {

class CapExceededError : public std::invalid_argument {
 public:
  CapExceededError(int n, int cap)
      : std::invalid_argument("oracle limited to " + std::to_string(cap) +
                              " vertices, got " + std::to_string(n)),
        n_(n) {}
  int n() const { return n_; }

 private:
  int n_;
};

inline constexpr int kOracleMaxVertices = 11;
inline constexpr int kOracleNodeMaxVertices = 9;

// Maximum edge count of a triangle-free graph on n vertices with maximum
// degree at most d, with one witness. Throws CapExceededError for n > 11.
std::pair<int64_t, Graph> brute_force_max(int n, int d);

// Best completion of a search node under its F0/F1 fixings, degree classes
// and ordering cut; nullopt if none exists. Throws CapExceededError for n > 9.
std::optional<std::pair<int64_t, Graph>> brute_force_under_node(
    const SearchNode& node, int d);

}  // namespace trifree

#endif  // TRIFREE_ORACLE_HPP_
