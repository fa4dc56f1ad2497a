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

#include "trifree/components.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "trifree/constructions.hpp"
#include "trifree/formula.hpp"

namespace trifree {

namespace {

// Circulant graph on Z_n whose connection set is {±x : x in half} with the
// full set sum-free, i.e. a vertex-transitive triangle-free graph.
std::optional<Graph> sum_free_circulant(int n, int degree) {
  if (degree % 2 != 0 || degree >= n) return std::nullopt;
  const int want = degree / 2;
  std::vector<char> in(n, 0);
  std::vector<int> chosen;
  auto sum_free_with = [&](int x) {
    in[x] = in[n - x] = 1;
    bool ok = true;
    for (int a = 1; a < n && ok; ++a) {
      if (!in[a]) continue;
      for (int b = a; b < n; ++b) {
        if (in[b] && in[(a + b) % n]) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) in[x] = in[n - x] = 0;
    return ok;
  };
  std::function<bool(int)> extend = [&](int from) {
    if (static_cast<int>(chosen.size()) == want) return true;
    for (int x = from; x <= (n - 1) / 2; ++x) {
      if (!sum_free_with(x)) continue;
      chosen.push_back(x);
      if (extend(x + 1)) return true;
      chosen.pop_back();
      in[x] = in[n - x] = 0;
    }
    return false;
  };
  if (!extend(1)) return std::nullopt;
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    for (int x : chosen) g.add_edge(v, (v + x) % n);
  }
  return g;
}

// Circulant route for the component with matching number nu. Odd d starts
// from a (d+1)-regular circulant and strips a perfect matching of G - v
// plus one edge at v.
std::optional<Graph> circulant_component(int d, int nu, int64_t target) {
  const int n = 2 * nu + 1;
  if (d % 2 == 0) {
    auto g = sum_free_circulant(n, d);
    if (!g || g->num_edges() != target || !is_factor_critical(*g)) return std::nullopt;
    return g;
  }
  auto base = sum_free_circulant(n, d + 1);
  if (!base || !is_factor_critical(*base)) return std::nullopt;
  const Vertex v = n - 1;
  const Matching pm = max_matching(base->without_vertex(v));
  std::vector<Edge> drop = pm.pairs;
  drop.emplace_back(v, base->neighbors(v).front());
  std::vector<Edge> keep;
  for (const Edge& e : base->edges()) {
    if (std::find(drop.begin(), drop.end(), e) == drop.end()) keep.push_back(e);
  }
  Graph g(n, keep);
  if (g.num_edges() != target || g.max_degree() > d) return std::nullopt;
  return g;
}

}  // namespace

std::optional<Graph> extremal_component(int d, int nu, const SolverConfig& cfg) {
  const int64_t target = f_delta(d, nu, true);
  const ZValue z = z_of(d);
  if (nu == d || (d >= 7 && z.exact() && nu < z.value())) return b_graph(d, nu - d);
  if (auto g = circulant_component(d, nu, target)) return g;
  SolverConfig search_cfg = cfg;
  if (search_cfg.method == Method::kOracle) search_cfg.method = Method::kIterativeOrbital;
  const SolveResult r = solve(Instance{d, nu}, search_cfg);
  if (!r.incumbent || r.lb != target) return std::nullopt;
  return r.incumbent;
}

std::map<int, Graph> plan_components(const KnapsackPlan& plan, const SolverConfig& cfg) {
  std::map<int, Graph> out;
  for (const auto& [nu, count] : plan.counts) {
    if (count == 0) continue;
    auto g = extremal_component(plan.d, nu, cfg);
    if (!g) throw MissingComponentError(nu);
    out.emplace(nu, std::move(*g));
  }
  return out;
}

}  // namespace trifree
