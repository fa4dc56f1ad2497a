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

#include <tuple>
#include <vector>

#include "trifree/formula.hpp"

namespace trifree {

namespace {

// Plans are compared lexicographically on additive keys, so the unbounded
// knapsack recurrence stays exact under the tie-breaking order.
struct Score {
  int64_t utility = 0;
  int64_t z_components = 0;
  int64_t neg_components = 0;
  int64_t neg_volume = 0;

  Score operator+(const Score& o) const {
    return {utility + o.utility, z_components + o.z_components,
            neg_components + o.neg_components, neg_volume + o.neg_volume};
  }
  bool operator<(const Score& o) const {
    return std::tie(utility, z_components, neg_components, neg_volume) <
           std::tie(o.utility, o.z_components, o.neg_components, o.neg_volume);
  }
};

}  // namespace

int64_t KnapsackPlan::used_volume() const {
  int64_t v = 0;
  for (const auto& [i, x] : counts) v += i * x;
  return v;
}

int64_t KnapsackPlan::component_count() const {
  int64_t c = 0;
  for (const auto& [i, x] : counts) c += x;
  return c;
}

KnapsackPlan solve_knapsack(int d, int m,
                            const std::map<int, int64_t>& utilities) {
  if (m < 1) throw std::invalid_argument("solve_knapsack needs m >= 1");
  const ZValue z = z_of(d);
  if (!z.exact()) throw UnknownZError(d);
  const int zv = z.value();

  struct Item {
    int volume;
    Score gain;
  };
  std::vector<Item> items;
  for (int i = d; i <= zv; ++i) {
    auto it = utilities.find(i);
    if (it == utilities.end()) throw MissingUtilityError(i);
    items.push_back({i, Score{it->second - static_cast<int64_t>(d) * i,
                              i == zv ? 1 : 0, -1, -i}});
  }

  // best[c]: best plan with volume <= c; take[c]: item index used last, or
  // -1 when best[c] == best[c-1].
  std::vector<Score> best(m + 1);
  std::vector<int> take(m + 1, -1);
  for (int c = 1; c <= m; ++c) {
    best[c] = best[c - 1];
    for (int k = 0; k < static_cast<int>(items.size()); ++k) {
      const Item& item = items[k];
      if (item.volume > c) continue;
      Score cand = best[c - item.volume] + item.gain;
      if (best[c] < cand) {
        best[c] = cand;
        take[c] = k;
      }
    }
  }

  KnapsackPlan plan;
  plan.d = d;
  plan.m = m;
  for (const Item& item : items) plan.counts[item.volume] = 0;
  int c = m;
  while (c > 0) {
    if (take[c] < 0) {
      --c;
      continue;
    }
    const Item& item = items[take[c]];
    ++plan.counts[item.volume];
    c -= item.volume;
  }
  plan.star_count = m - plan.used_volume();
  plan.objective = static_cast<int64_t>(d) * m + best[m].utility;
  return plan;
}

std::map<int, int64_t> component_utilities(int d, bool assume_conjecture) {
  const ZValue z = z_of(d);
  if (!z.exact()) throw UnknownZError(d);
  std::map<int, int64_t> out;
  for (int i = d; i <= z.value(); ++i) out[i] = f_delta(d, i, assume_conjecture);
  return out;
}

bool check_special_structure(const KnapsackPlan& plan) {
  const ZValue z = z_of(plan.d);
  const int zv = z.exact() ? z.value() : z.hi;
  int64_t below = 0;
  for (const auto& [i, x] : plan.counts) {
    if (i < zv) below += x;
  }
  return below <= 1;
}

}  // namespace trifree
