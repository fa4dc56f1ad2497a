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

#include "trifree/knapsack.hpp"

#include <chrono>

#include "gtest/gtest.h"
#include "trifree/components.hpp"
#include "trifree/constructions.hpp"
#include "trifree/formula.hpp"

namespace trifree {
namespace {

// Best objective over every vector of copies with total volume <= m.
int64_t exhaustive(int d, int m, const std::map<int, int64_t>& util) {
  std::vector<std::pair<int, int64_t>> items(util.begin(), util.end());
  int64_t best = 0;
  auto rec = [&](auto&& self, size_t k, int room, int64_t gain) -> void {
    if (k == items.size()) {
      best = std::max(best, gain);
      return;
    }
    const auto [vol, f] = items[k];
    for (int x = 0; x * vol <= room; ++x) {
      self(self, k + 1, room - x * vol, gain + x * (f - int64_t{d} * vol));
    }
  };
  rec(rec, 0, m, 0);
  return int64_t{d} * m + best;
}

TEST(KnapsackTest, Examples) {
  const KnapsackPlan a = solve_knapsack(8, 20, component_utilities(8, false));
  EXPECT_EQ(a.objective, 168);
  EXPECT_EQ(a.counts.at(10), 2);
  EXPECT_EQ(a.star_count, 0);

  const KnapsackPlan b = solve_knapsack(7, 15, component_utilities(7, false));
  EXPECT_EQ(b.objective, 108);
  EXPECT_EQ(b.star_count, 6);
  EXPECT_EQ(b.counts.at(9), 1);

  const KnapsackPlan c = solve_knapsack(8, 19, component_utilities(8, false));
  EXPECT_EQ(c.objective, 158);
  EXPECT_EQ(c.component_count(), 2);
  EXPECT_EQ(c.counts.at(10), 1);
}

TEST(KnapsackTest, AgreesWithExhaustiveEnumeration) {
  for (int d = 7; d <= 10; ++d) {
    const auto util = component_utilities(d, true);
    for (int m = 1; m <= 30; ++m) {
      const KnapsackPlan plan = solve_knapsack(d, m, util);
      EXPECT_EQ(plan.objective, exhaustive(d, m, util)) << d << "," << m;
      EXPECT_LE(plan.used_volume(), m);
      EXPECT_EQ(plan.used_volume() + plan.star_count, m);
      EXPECT_TRUE(check_special_structure(plan)) << d << "," << m;
    }
  }
}

TEST(KnapsackTest, ObjectiveMatchesFormulaWhenZIsExact) {
  for (int d = 7; d <= 10; ++d) {
    const auto util = component_utilities(d, true);
    for (int m = 1; m <= 60; ++m) {
      EXPECT_EQ(solve_knapsack(d, m, util).objective, f_delta(d, m, true))
          << d << "," << m;
    }
  }
}

TEST(KnapsackTest, MissingUtility) {
  std::map<int, int64_t> util = component_utilities(8, false);
  util.erase(9);
  EXPECT_THROW(solve_knapsack(8, 20, util), MissingUtilityError);
  EXPECT_THROW(solve_knapsack(15, 20, {}), UnknownZError);
}

TEST(KnapsackTest, LargeMIsFast) {
  const auto start = std::chrono::steady_clock::now();
  const KnapsackPlan plan = solve_knapsack(10, 10000, component_utilities(10, true));
  const double s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(s, 1.0);
  EXPECT_EQ(plan.objective, f_delta(10, 10000, true));
}

TEST(KnapsackTest, AssembledGraphMatchesObjective) {
  SolverConfig cfg;
  cfg.time_limit_s = 60;
  for (auto [d, m] : std::vector<std::pair<int, int>>{{7, 15}, {8, 19}, {8, 20}, {10, 27}}) {
    const KnapsackPlan plan = solve_knapsack(d, m, component_utilities(d, true));
    const Graph g = assemble(plan, plan_components(plan, cfg));
    EXPECT_EQ(g.num_edges(), plan.objective) << d << "," << m;
    EXPECT_TRUE(is_triangle_free(g));
    EXPECT_LE(g.max_degree(), d);
    EXPECT_EQ(max_matching(g).size(), m);
  }
}

TEST(ComponentTest, EveryComponentIsExtremal) {
  SolverConfig cfg;
  cfg.time_limit_s = 60;
  for (int d = 7; d <= 10; ++d) {
    for (int nu = d; nu <= z_of(d).value(); ++nu) {
      const std::optional<Graph> g = extremal_component(d, nu, cfg);
      ASSERT_TRUE(g.has_value()) << d << "," << nu;
      EXPECT_EQ(g->num_edges(), f_delta(d, nu, true)) << d << "," << nu;
      EXPECT_TRUE(is_triangle_free(*g));
      EXPECT_LE(g->max_degree(), d);
      EXPECT_EQ(max_matching(*g).size(), nu);
    }
  }
}

}  // namespace
}  // namespace trifree
