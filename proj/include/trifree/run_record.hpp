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

// JSON run records written by the command-line tool.

#ifndef TRIFREE_RUN_RECORD_HPP_
#define TRIFREE_RUN_RECORD_HPP_

#include <string>

#include "json.hpp"
#include "trifree/formula.hpp"
#include "trifree/knapsack.hpp"
#include "trifree/search.hpp"

namespace trifree {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunRecord {
  std::string timestamp;  // ISO 8601, UTC
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json output = nlohmann::json::object();
  std::string tool_version = kToolVersion;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

std::string utc_timestamp();

nlohmann::json to_json(const RunRecord& r);
// Throws nlohmann::json::exception on missing or mistyped fields.
RunRecord run_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SolverConfig& cfg);
SolverConfig solver_config_from_json(const nlohmann::json& j);

// {d, m, method, lb, ub, status, nodes, wall_s, orbit_s, incumbent_graph6,
//  config, ...}
nlohmann::json to_json(const Instance& inst, const SolverConfig& cfg,
                       const SolveResult& r);

nlohmann::json to_json(const KnapsackPlan& plan);

}  // namespace trifree

#endif  // TRIFREE_RUN_RECORD_HPP_
