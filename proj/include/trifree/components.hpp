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

// Extremal building blocks for knapsack plans.

#ifndef TRIFREE_COMPONENTS_HPP_
#define TRIFREE_COMPONENTS_HPP_

#include <map>
#include <optional>

#include "trifree/graph.hpp"
#include "trifree/knapsack.hpp"
#include "trifree/search.hpp"

namespace trifree {

// A triangle-free graph on 2*nu+1 vertices with maximum degree d and
// f_delta(d, nu) edges. Uses b_graph where it applies and falls back to a
// search under `cfg` otherwise; nullopt if the search does not reach the
// target in time.
std::optional<Graph> extremal_component(int d, int nu, const SolverConfig& cfg);

// One component per matching number used by `plan`. Throws
// MissingComponentError when one cannot be produced.
std::map<int, Graph> plan_components(const KnapsackPlan& plan, const SolverConfig& cfg);

}  // namespace trifree

#endif  // TRIFREE_COMPONENTS_HPP_
