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

#include "trifree/run_record.hpp"

#include <chrono>
#include <ctime>

#include "trifree/graph6.hpp"

namespace trifree {

using nlohmann::json;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json to_json(const RunRecord& r) {
  return json{{"timestamp", r.timestamp},
              {"command", r.command},
              {"config", r.config},
              {"output", r.output},
              {"tool_version", r.tool_version}};
}

RunRecord run_record_from_json(const json& j) {
  RunRecord r;
  r.timestamp = j.at("timestamp").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.config = j.at("config");
  r.output = j.at("output");
  r.tool_version = j.at("tool_version").get<std::string>();
  if (!r.config.is_object() || !r.output.is_object()) {
    throw json::type_error::create(302, "config and output must be objects", &j);
  }
  return r;
}

json to_json(const SolverConfig& cfg) {
  return json{{"method", to_string(cfg.method)},
              {"time_limit_s", cfg.time_limit_s},
              {"orbit_depth_cutoff", to_string(cfg.orbit_depth_cutoff)},
              {"branch_rule", to_string(cfg.branch_rule)},
              {"pair_rule", to_string(cfg.pair_rule)},
              {"workers", cfg.workers},
              {"deterministic", cfg.deterministic},
              {"degree_order_cut", cfg.degree_order_cut},
              {"symmetry_node_budget", cfg.symmetry_node_budget},
              {"seed", cfg.seed}};
}

SolverConfig solver_config_from_json(const json& j) {
  SolverConfig cfg;
  cfg.method = method_from_string(j.at("method").get<std::string>());
  cfg.time_limit_s = j.at("time_limit_s").get<double>();
  cfg.orbit_depth_cutoff = orbit_cutoff_from_string(j.at("orbit_depth_cutoff").get<std::string>());
  cfg.branch_rule = branch_rule_from_string(j.at("branch_rule").get<std::string>());
  if (j.contains("pair_rule")) {
    cfg.pair_rule = pair_rule_from_string(j.at("pair_rule").get<std::string>());
  }
  cfg.workers = j.at("workers").get<int>();
  cfg.deterministic = j.at("deterministic").get<bool>();
  cfg.degree_order_cut = j.value("degree_order_cut", true);
  cfg.symmetry_node_budget = j.value("symmetry_node_budget", int64_t{20000});
  cfg.seed = j.value("seed", uint64_t{0});
  return cfg;
}

json to_json(const Instance& inst, const SolverConfig& cfg, const SolveResult& r) {
  json out{{"d", inst.d},
           {"m", inst.m},
           {"method", to_string(cfg.method)},
           {"lb", r.lb},
           {"ub", r.ub},
           {"status", to_string(r.status)},
           {"nodes", r.stats.nodes},
           {"wall_s", r.stats.wall_s},
           {"orbit_s", r.stats.orbit_s},
           {"orbit_calls", r.stats.orbit_calls},
           {"orbit_depth_limit", r.stats.orbit_depth_limit},
           {"incumbent_graph6", r.incumbent ? json(to_graph6(*r.incumbent)) : json(nullptr)},
           {"config", to_json(cfg)}};
  if (!r.stats.iterative_ubs.empty()) {
    out["iterative_ubs"] = r.stats.iterative_ubs;
    out["iterative_round_values"] = r.stats.iterative_round_values;
  }
  return out;
}

json to_json(const KnapsackPlan& plan) {
  json counts = json::object();
  for (const auto& [i, x] : plan.counts) counts[std::to_string(i)] = x;
  return json{{"d", plan.d},
              {"m", plan.m},
              {"objective", plan.objective},
              {"star_count", plan.star_count},
              {"counts", counts},
              {"special_structure", check_special_structure(plan)}};
}

}  // namespace trifree
