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

#ifndef TRIFREE_CONSTRUCTIONS_HPP_
#define TRIFREE_CONSTRUCTIONS_HPP_

#include <map>
#include <stdexcept>
#include <string>

#include "trifree/graph.hpp"

namespace trifree {

struct KnapsackPlan;

class InvalidTError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MissingComponentError : public std::invalid_argument {
 public:
  explicit MissingComponentError(int nu)
      : std::invalid_argument("no component graph with matching number " +
                              std::to_string(nu)),
        nu_(nu) {}
  int matching_number() const { return nu_; }

 private:
  int nu_;
};

// K_{1,d}: vertex 0 is the centre.
Graph d_star(int d);

// K_{d+1} for even d, and for odd d the graph K'_{d+1}: K_{d+1} minus the
// perfect matching {(2i, 2i+1)}, plus a vertex joined to 0..d-1.
Graph general_block(int d);

// Disjoint union of q general blocks and r d-stars with m = q*ceil(d/2) + r,
// q maximal. Blocks come first, then stars.
Graph general_extremal(int d, int m);

// B_{d,d+t} on 2(d+t)+1 vertices.
//
// Layout: left side F = [0, d-1), H = [d-1, d+t); right side F = [d+t,
// 2d+t-1), H = [2d+t-1, 2d+2t); apex = 2d+2t. Start from the complete
// bipartite graph between the sides, drop the H-H edges, and drop the t
// cyclic-shift matchings {(F_left[j], F_right[(j+s) mod (d-1)])}, s < t.
// The apex is joined to every H vertex.
//
// t = 0 is accepted for every d >= 2. For t > 0 it needs d >= 7, Z(d) exact
// and t < Z(d) - d; otherwise InvalidTError.
Graph b_graph(int d, int t);

// Stars first, then components in increasing matching number.
Graph assemble(const KnapsackPlan& plan,
               const std::map<int, Graph>& component_graphs);

}  // namespace trifree

#endif  // TRIFREE_CONSTRUCTIONS_HPP_
