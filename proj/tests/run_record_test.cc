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

#include <regex>

#include "gtest/gtest.h"
#include "trifree/graph6.hpp"

namespace trifree {
namespace {

TEST(RunRecordTest, RoundTrip) {
  RunRecord r;
  r.timestamp = utc_timestamp();
  r.command = "solve";
  r.config = {{"d", 3}, {"m", 3}};
  r.output = {{"lb", 10}};
  const RunRecord back = run_record_from_json(to_json(r));
  EXPECT_EQ(back, r);
  EXPECT_EQ(back.tool_version, kToolVersion);
}

TEST(RunRecordTest, TimestampFormat) {
  EXPECT_TRUE(std::regex_match(utc_timestamp(),
                               std::regex(R"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z)")));
}

TEST(RunRecordTest, MissingFieldThrows) {
  nlohmann::json j = to_json(RunRecord{});
  j.erase("command");
  EXPECT_THROW(run_record_from_json(j), nlohmann::json::exception);
}

TEST(RunRecordTest, SolverConfigRoundTrip) {
  SolverConfig cfg;
  cfg.method = Method::kOrbital;
  cfg.time_limit_s = 12.5;
  cfg.orbit_depth_cutoff = OrbitDepthCutoff::Fixed(6);
  cfg.branch_rule = BranchRule::kMaxSaturationLex;
  cfg.pair_rule = PairRule::kFirstFail;
  cfg.workers = 3;
  cfg.deterministic = false;
  cfg.degree_order_cut = false;
  cfg.symmetry_node_budget = 77;
  cfg.seed = 5;
  const SolverConfig back = solver_config_from_json(to_json(cfg));
  EXPECT_EQ(back.method, cfg.method);
  EXPECT_EQ(back.time_limit_s, cfg.time_limit_s);
  EXPECT_EQ(to_string(back.orbit_depth_cutoff), "6");
  EXPECT_EQ(back.branch_rule, cfg.branch_rule);
  EXPECT_EQ(back.pair_rule, PairRule::kFirstFail);
  EXPECT_EQ(back.workers, 3);
  EXPECT_FALSE(back.deterministic);
  EXPECT_FALSE(back.degree_order_cut);
  EXPECT_EQ(back.symmetry_node_budget, 77);
  EXPECT_EQ(back.seed, 5u);
}

TEST(RunRecordTest, SolveFields) {
  SolveResult r;
  r.lb = r.ub = 5;
  r.status = SolveStatus::kOptimal;
  r.incumbent = from_graph6("Dhc");
  r.stats.nodes = 3;
  const nlohmann::json j = to_json(Instance{2, 2}, SolverConfig{}, r);
  for (const char* key : {"d", "m", "method", "lb", "ub", "status", "nodes", "wall_s",
                          "orbit_s", "incumbent_graph6", "config"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["incumbent_graph6"], "Dhc");
  EXPECT_EQ(j["status"], "Optimal");
  EXPECT_EQ(j["method"], "IterativeOrbital");
}

TEST(RunRecordTest, NoIncumbentIsNull) {
  SolveResult r;
  r.status = SolveStatus::kInfeasible;
  const nlohmann::json j = to_json(Instance{2, 2}, SolverConfig{}, r);
  EXPECT_TRUE(j["incumbent_graph6"].is_null());
}

}  // namespace
}  // namespace trifree
