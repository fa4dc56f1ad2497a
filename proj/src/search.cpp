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

#include "trifree/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <deque>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "trifree/oracle.hpp"

namespace trifree {

namespace {

using Clock = std::chrono::steady_clock;

inline Mask bit(Vertex v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Vertex lowest(Mask m) { return std::countr_zero(m); }

Mask all_vertices(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

int base_cap(VertexClass c, int d) {
  return c == VertexClass::kAtMostDMinus1 ? d - 1 : d;
}

// Deficient vertices in the order the ordering cut ranks them (the vertex
// moved first, i.e. the highest index, comes first).
std::vector<Vertex> deficient_order(const SearchNode& node) {
  std::vector<Vertex> out;
  for (Vertex v = node.n() - 1; v >= 0; --v) {
    if (node.vertex_class(v) == VertexClass::kAtMostDMinus1) out.push_back(v);
  }
  return out;
}

// Lower degree requirement per vertex: d for ExactlyD, and under the
// ordering cut a deficient vertex must reach the largest F1 degree among the
// deficient vertices ranked after it.
std::array<int, kMaxVertices> lower_degrees(const SearchNode& node, int d) {
  std::array<int, kMaxVertices> low{};
  for (Vertex v = 0; v < node.n(); ++v) {
    low[v] = node.vertex_class(v) == VertexClass::kExactlyD ? d : 0;
  }
  if (node.degree_order_cut()) {
    const std::vector<Vertex> order = deficient_order(node);
    int suffix = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      low[*it] = std::max(low[*it], suffix);
      suffix = std::max(suffix, node.degree(*it));
    }
  }
  return low;
}

void set_zero_all(SearchNode& node, Vertex v, Mask targets) {
  for (; targets; targets &= targets - 1) node.set_zero(v, lowest(targets));
}

void set_one_all(SearchNode& node, Vertex v, Mask targets) {
  for (; targets; targets &= targets - 1) node.set_one(v, lowest(targets));
}

void check_incumbent(const Graph& g, const SearchNode& node, int d) {
  if (!is_triangle_free(g)) throw std::logic_error("incumbent has a triangle");
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int deg = g.degree(v);
    const VertexClass c = node.vertex_class(v);
    if (deg > base_cap(c, d) || (c == VertexClass::kExactlyD && deg != d)) {
      throw std::logic_error("incumbent violates a degree constraint");
    }
  }
}

struct Shared {
  explicit Shared(int64_t floor_value, Clock::time_point deadline_at)
      : best(floor_value), deadline(deadline_at) {}

  std::mutex mu;
  std::atomic<int64_t> best;
  std::optional<Graph> incumbent;
  Clock::time_point deadline;
  std::atomic<bool> timed_out{false};
  std::atomic<int> orbit_depth_limit{INT_MAX};
  std::atomic<int64_t> nodes{0};
  std::atomic<int64_t> orbit_calls{0};
  std::atomic<int64_t> orbit_ns{0};
  std::atomic<int64_t> open_bound{LLONG_MIN};

  void offer(const Graph& g, int64_t value) {
    std::lock_guard<std::mutex> lock(mu);
    if (value > best.load()) {
      incumbent = g;
      best.store(value);
    }
  }

  void note_open(int64_t b) {
    int64_t cur = open_bound.load();
    while (b > cur && !open_bound.compare_exchange_weak(cur, b)) {
    }
  }
};

class Engine {
 public:
  Engine(int d, const SolverConfig& cfg, Shared& shared)
      : d_(d), cfg_(cfg), shared_(shared) {
    use_orbits_ = (cfg.method == Method::kOrbital ||
                   cfg.method == Method::kIterativeOrbital) &&
                  cfg.branch_rule == BranchRule::kMaxOrbit &&
                  cfg.orbit_depth_cutoff.kind != OrbitDepthCutoff::Kind::kOff;
    if (cfg.orbit_depth_cutoff.kind == OrbitDepthCutoff::Kind::kFixed) {
      shared_.orbit_depth_limit.store(cfg.orbit_depth_cutoff.depth);
    }
  }

  // Children of `node`, already propagated, in exploration order.
  std::vector<SearchNode> branch(const SearchNode& node) {
    std::vector<SearchNode> children;
    const int depth = node.depth();
    if (use_orbits_ && depth <= shared_.orbit_depth_limit.load()) {
      const auto t0 = Clock::now();
      SymmetryOptions opts;
      opts.node_budget = cfg_.symmetry_node_budget;
      const OrbitPartition part = orbits(to_colored_model(node), opts);
      shared_.orbit_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(
                              Clock::now() - t0)
                              .count();
      ++shared_.orbit_calls;
      if (!part.classes.empty()) {
        const auto& orbit = part.classes[part.largest_class()];
        if (orbit.size() > 1) {
          SearchNode left = node;
          left.set_one(orbit.front().u, orbit.front().v);
          SearchNode right = node;
          for (const Edge& e : orbit) right.set_zero(e.u, e.v);
          push_child(children, left, depth);
          push_child(children, right, depth);
          return children;
        }
        if (cfg_.orbit_depth_cutoff.kind == OrbitDepthCutoff::Kind::kAdaptive) {
          int expected = INT_MAX;
          shared_.orbit_depth_limit.compare_exchange_strong(expected, depth);
        }
      }
    }
    const Edge e = cfg_.pair_rule == PairRule::kFirstFail ? first_fail_pair(node)
                                                           : saturation_pair(node);
    SearchNode left = node;
    left.set_one(e.u, e.v);
    SearchNode right = node;
    right.set_zero(e.u, e.v);
    push_child(children, left, depth);
    push_child(children, right, depth);
    return children;
  }

  // Depth-first search below `root` (already propagated). Returns false if
  // the time limit interrupted it.
  bool run(const SearchNode& root) {
    std::vector<SearchNode> stack;
    stack.push_back(root);
    while (!stack.empty()) {
      if (check_time()) {
        for (const SearchNode& open : stack) shared_.note_open(bound(open, d_));
        return false;
      }
      SearchNode node = std::move(stack.back());
      stack.pop_back();
      ++local_nodes_;
      if (bound(node, d_) <= shared_.best.load()) continue;
      if (node.num_free_pairs() == 0) {
        accept(node);
        continue;
      }
      std::vector<SearchNode> children = branch(node);
      for (auto it = children.rbegin(); it != children.rend(); ++it) {
        stack.push_back(std::move(*it));
      }
    }
    return true;
  }

  void flush() {
    shared_.nodes += local_nodes_;
    local_nodes_ = 0;
  }

  bool check_time() {
    if (shared_.timed_out.load()) return true;
    if ((++tick_ & 255) != 0) return false;
    if (Clock::now() >= shared_.deadline) {
      shared_.timed_out.store(true);
      return true;
    }
    return false;
  }

  void accept(const SearchNode& node) {
    const int64_t value = node.num_ones();
    if (value <= shared_.best.load()) return;
    Graph g = node.to_graph();
    check_incumbent(g, node, d_);
    shared_.offer(g, value);
  }

 private:
  void push_child(std::vector<SearchNode>& out, SearchNode child, int depth) {
    child.set_depth(depth + 1);
    if (auto p = propagate(child, d_, shared_.best.load() + 1)) out.push_back(std::move(*p));
  }

  // Vertex with the fewest spare free pairs, paired with its fullest free
  // neighbour.
  Edge first_fail_pair(const SearchNode& node) const {
    const auto low = lower_degrees(node, d_);
    int best_slack = INT_MAX;
    Vertex bu = -1;
    for (Vertex u = 0; u < node.n(); ++u) {
      const int fr = node.free_degree(u);
      if (fr == 0) continue;
      const int slack = fr - std::max(0, low[u] - node.degree(u));
      if (slack < best_slack) {
        best_slack = slack;
        bu = u;
      }
    }
    int best_score = -1;
    Edge best;
    for (Mask m = node.free_mask(bu); m; m &= m - 1) {
      const Vertex v = lowest(m);
      const int score = node.degree(v);
      if (score > best_score) {
        best_score = score;
        best = Edge(bu, v);
      }
    }
    return best;
  }

  // Free pair maximising deg(u) + deg(v); ties go to the smallest pair.
  static Edge saturation_pair(const SearchNode& node) {
    int best_score = -1;
    Edge best;
    for (Vertex u = 0; u < node.n(); ++u) {
      const int du = node.degree(u);
      for (Mask m = node.free_mask(u) & ~all_vertices(u + 1); m; m &= m - 1) {
        const Vertex v = lowest(m);
        const int score = du + node.degree(v);
        if (score > best_score) {
          best_score = score;
          best = Edge(u, v);
        }
      }
    }
    if (best_score < 0) throw std::logic_error("branching on a node without free pairs");
    return best;
  }

  int d_;
  const SolverConfig& cfg_;
  Shared& shared_;
  bool use_orbits_ = false;
  int64_t local_nodes_ = 0;
  uint32_t tick_ = 0;
};

void run_parallel(const SearchNode& root, int d, const SolverConfig& cfg,
                  Shared& shared, bool& finished) {
  // Seed a frontier breadth-first, then let workers drain it.
  std::deque<SearchNode> frontier;
  frontier.push_back(root);
  Engine seeder(d, cfg, shared);
  const size_t target = static_cast<size_t>(8 * cfg.workers);
  while (!frontier.empty() && frontier.size() < target) {
    SearchNode node = std::move(frontier.front());
    frontier.pop_front();
    if (bound(node, d) <= shared.best.load()) continue;
    if (node.num_free_pairs() == 0) {
      seeder.accept(node);
      continue;
    }
    for (SearchNode& c : seeder.branch(node)) frontier.push_back(std::move(c));
  }
  seeder.flush();
  if (cfg.seed != 0) {
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(frontier.begin(), frontier.end(), rng);
  }

  std::mutex queue_mu;
  std::atomic<bool> all_done{true};
  auto worker = [&]() {
    Engine engine(d, cfg, shared);
    for (;;) {
      SearchNode node;
      {
        std::lock_guard<std::mutex> lock(queue_mu);
        if (frontier.empty()) break;
        node = std::move(frontier.front());
        frontier.pop_front();
      }
      if (!engine.run(node)) {
        all_done = false;
        break;
      }
    }
    engine.flush();
  };
  std::vector<std::thread> threads;
  for (int i = 0; i < cfg.workers; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  for (const SearchNode& open : frontier) shared.note_open(bound(open, d));
  finished = all_done && frontier.empty();
}

}  // namespace

SearchNode::SearchNode(int n, VertexClass uniform)
    : SearchNode(n, std::vector<VertexClass>(n, uniform)) {}

SearchNode::SearchNode(int n, const std::vector<VertexClass>& classes) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("search supports 1..64 vertices");
  }
  if (static_cast<int>(classes.size()) != n) {
    throw std::invalid_argument("vertex class count does not match n");
  }
  for (Vertex v = 0; v < n; ++v) class_[v] = classes[v];
}

Mask SearchNode::free_mask(Vertex v) const {
  return all_vertices(n_) & ~one_[v] & ~zero_[v] & ~bit(v);
}

bool SearchNode::is_free(Vertex u, Vertex v) const {
  return u != v && !is_one(u, v) && !is_zero(u, v);
}

int SearchNode::degree(Vertex v) const { return popcount(one_[v]); }
int SearchNode::free_degree(Vertex v) const { return popcount(free_mask(v)); }

int SearchNode::num_ones() const {
  int total = 0;
  for (Vertex v = 0; v < n_; ++v) total += popcount(one_[v]);
  return total / 2;
}

int SearchNode::num_free_pairs() const {
  int total = 0;
  for (Vertex v = 0; v < n_; ++v) total += free_degree(v);
  return total / 2;
}

void SearchNode::set_one(Vertex u, Vertex v) {
  one_[u] |= bit(v);
  one_[v] |= bit(u);
}

void SearchNode::set_zero(Vertex u, Vertex v) {
  zero_[u] |= bit(v);
  zero_[v] |= bit(u);
}

std::vector<Edge> SearchNode::fixed_ones() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Mask m = one_[u] & ~all_vertices(u + 1); m; m &= m - 1) {
      out.emplace_back(u, lowest(m));
    }
  }
  return out;
}

std::vector<Edge> SearchNode::fixed_zeros() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Mask m = zero_[u] & ~all_vertices(u + 1); m; m &= m - 1) {
      out.emplace_back(u, lowest(m));
    }
  }
  return out;
}

std::vector<Edge> SearchNode::free_pairs() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Mask m = free_mask(u) & ~all_vertices(u + 1); m; m &= m - 1) {
      out.emplace_back(u, lowest(m));
    }
  }
  return out;
}

Graph SearchNode::to_graph() const {
  const std::vector<Edge> e = fixed_ones();
  return Graph(n_, e);
}

bool operator==(const SearchNode& a, const SearchNode& b) {
  if (a.n_ != b.n_ || a.order_cut_ != b.order_cut_) return false;
  for (Vertex v = 0; v < a.n_; ++v) {
    if (a.one_[v] != b.one_[v] || a.zero_[v] != b.zero_[v] ||
        a.class_[v] != b.class_[v]) {
      return false;
    }
  }
  return true;
}

ColoredModel to_colored_model(const SearchNode& node) {
  const int n = node.n();
  std::vector<int> colors(n);
  for (Vertex v = 0; v < n; ++v) {
    const VertexClass c = node.vertex_class(v);
    colors[v] = static_cast<int>(c);
    // The ordering cut tells deficient vertices apart.
    if (c == VertexClass::kAtMostDMinus1 && node.degree_order_cut()) {
      colors[v] = 3 + v;
    }
  }
  ColoredModel model(n, colors);
  for (Vertex u = 0; u < n; ++u) {
    for (Mask m = node.ones(u) & ~all_vertices(u + 1); m; m &= m - 1) {
      model.set_color(u, lowest(m), PairColor::kFixedOne);
    }
    for (Mask m = node.zeros(u) & ~all_vertices(u + 1); m; m &= m - 1) {
      model.set_color(u, lowest(m), PairColor::kFixedZero);
    }
  }
  return model;
}

std::array<int, kMaxVertices> effective_caps(const SearchNode& node, int d) {
  std::array<int, kMaxVertices> cap{};
  for (Vertex v = 0; v < node.n(); ++v) cap[v] = base_cap(node.vertex_class(v), d);
  if (node.degree_order_cut()) {
    int prev_max = INT_MAX;
    for (Vertex v : deficient_order(node)) {
      cap[v] = std::min(cap[v], prev_max);
      prev_max = std::min(cap[v], node.degree(v) + node.free_degree(v));
    }
  }
  // Handshake parity: once every vertex but one has its final degree pinned,
  // the last one's degree parity is known.
  const auto low = lower_degrees(node, d);
  int open = -1;
  int open_count = 0;
  int pinned_sum = 0;
  for (Vertex v = 0; v < node.n(); ++v) {
    const int top = std::min(cap[v], node.degree(v) + node.free_degree(v));
    if (low[v] >= top) {
      pinned_sum += top;
    } else {
      open = v;
      ++open_count;
    }
  }
  if (open_count == 1) {
    const int top = std::min(cap[open], node.degree(open) + node.free_degree(open));
    if ((top + pinned_sum) % 2 != 0) cap[open] = top - 1;
  } else if (open_count == 0 && pinned_sum % 2 != 0 && node.n() > 0) {
    cap[0] = std::min(cap[0], node.degree(0) + node.free_degree(0)) - 1;
  }
  return cap;
}

std::optional<SearchNode> propagate(const SearchNode& input, int d, int64_t min_edges) {
  SearchNode node = input;
  const int n = node.n();
  for (;;) {
    bool changed = false;
    // Triangle rule: the F1-neighbourhood of every vertex is independent.
    for (Vertex v = 0; v < n; ++v) {
      const Mask nb = node.ones(v);
      for (Mask m = nb; m; m &= m - 1) {
        const Vertex u = lowest(m);
        if (node.ones(u) & nb) return std::nullopt;
        const Mask add = nb & ~bit(u) & ~node.zeros(u);
        if (add) {
          set_zero_all(node, u, add);
          changed = true;
        }
      }
    }
    const auto cap = effective_caps(node, d);
    auto low = lower_degrees(node, d);
    if (min_edges > 0) {
      // Degree sum of any completion worth keeping is at least 2*min_edges.
      std::array<int, kMaxVertices> reach{};
      int64_t total = 0;
      for (Vertex v = 0; v < n; ++v) {
        reach[v] = std::min(cap[v], node.degree(v) + node.free_degree(v));
        total += reach[v];
      }
      const int64_t need = 2 * min_edges;
      if (total < need) return std::nullopt;
      for (Vertex v = 0; v < n; ++v) {
        const int64_t own = need - (total - reach[v]);
        if (own > low[v]) low[v] = static_cast<int>(own);
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      const int deg = node.degree(v);
      const Mask fr = node.free_mask(v);
      const int reach = deg + popcount(fr);
      if (deg > cap[v] || low[v] > reach || low[v] > cap[v]) return std::nullopt;
      if (fr == 0) continue;
      if (deg == cap[v]) {
        set_zero_all(node, v, fr);
        changed = true;
      } else if (low[v] == reach) {
        set_one_all(node, v, fr);
        changed = true;
      }
    }
    if (changed) continue;
    // Adjacent vertices have disjoint neighbourhoods, so their candidate
    // sets together must hold both degree floors.
    for (Vertex u = 0; u < n; ++u) {
      const Mask cu = node.ones(u) | node.free_mask(u);
      for (Mask m = node.ones(u) & ~all_vertices(u + 1); m; m &= m - 1) {
        const Vertex v = lowest(m);
        const Mask cv = node.ones(v) | node.free_mask(v);
        const int room = popcount(cu | cv);
        if (low[u] + low[v] > room) return std::nullopt;
        if (low[u] + low[v] < room) continue;
        const Mask only_u = cu & ~cv & node.free_mask(u);
        const Mask only_v = cv & ~cu & node.free_mask(v);
        if (only_u | only_v) {
          set_one_all(node, u, only_u);
          set_one_all(node, v, only_v);
          changed = true;
        }
      }
      if (changed) break;
    }
    if (!changed) return node;
  }
}

int64_t bound(const SearchNode& node, int d) {
  const auto cap = effective_caps(node, d);
  int64_t slack = 0;
  for (Vertex v = 0; v < node.n(); ++v) {
    const int room = std::max(0, cap[v] - node.degree(v));
    slack += std::min(room, node.free_degree(v));
  }
  return node.num_ones() + slack / 2;
}

SearchNode iterative_root(int n, int deficient, bool order_cut) {
  if (deficient < 0 || deficient > n) throw std::invalid_argument("bad deficient count");
  std::vector<VertexClass> classes(n, VertexClass::kExactlyD);
  for (int i = 0; i < deficient; ++i) classes[n - 1 - i] = VertexClass::kAtMostDMinus1;
  SearchNode root(n, classes);
  root.set_degree_order_cut(order_cut);
  return root;
}

int64_t iterative_upper_bound(int n, int d, int deficient) {
  return (static_cast<int64_t>(n) * d - deficient) / 2;
}

SolveResult solve_node(const SearchNode& root, int d, const SolverConfig& cfg,
                       int64_t lower_bound) {
  if (cfg.time_limit_s <= 0) throw std::invalid_argument("time_limit_s must be > 0");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(cfg.time_limit_s));
  Shared shared(lower_bound, deadline);

  bool finished = true;
  if (auto prop = propagate(root, d)) {
    const int workers = cfg.deterministic ? 1 : cfg.workers;
    if (workers == 1) {
      Engine engine(d, cfg, shared);
      finished = engine.run(*prop);
      engine.flush();
    } else {
      SolverConfig parallel_cfg = cfg;
      parallel_cfg.workers = workers;
      run_parallel(*prop, d, parallel_cfg, shared, finished);
    }
  }

  SolveResult result;
  result.stats.nodes = shared.nodes.load();
  result.stats.orbit_calls = shared.orbit_calls.load();
  result.stats.orbit_s = static_cast<double>(shared.orbit_ns.load()) * 1e-9;
  const int limit = shared.orbit_depth_limit.load();
  result.stats.orbit_depth_limit = limit == INT_MAX ? -1 : limit;
  result.incumbent = shared.incumbent;
  const int64_t found = shared.best.load();
  result.lb = result.incumbent ? found : 0;
  if (finished) {
    result.status = result.incumbent ? SolveStatus::kOptimal : SolveStatus::kInfeasible;
    result.ub = result.incumbent ? found : std::max<int64_t>(lower_bound, 0);
  } else {
    result.status = SolveStatus::kTimeLimit;
    result.ub = std::max({shared.open_bound.load(), found, result.lb});
  }
  result.stats.wall_s = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

SolveResult solve_basic(const Instance& inst, const SolverConfig& cfg) {
  if (cfg.method != Method::kBasic && cfg.method != Method::kOrbital) {
    throw std::invalid_argument("solve_basic needs method Basic or Orbital");
  }
  const SearchNode root(inst.num_vertices(), VertexClass::kAtMostD);
  SolveResult r = solve_node(root, inst.d, cfg, -1);
  // The empty graph is always feasible, so the root cannot be infeasible.
  if (r.status == SolveStatus::kTimeLimit) {
    r.ub = std::min<int64_t>(r.ub, precomputed_ub(inst.d, inst.m));
  }
  return r;
}

SolveResult solve_iterative(const Instance& inst, const SolverConfig& cfg) {
  if (cfg.method != Method::kIterative && cfg.method != Method::kIterativeOrbital) {
    throw std::invalid_argument("solve_iterative needs method Iterative or IterativeOrbital");
  }
  const auto start = Clock::now();
  const int n = inst.num_vertices();
  const int d = inst.d;

  SolveResult result;
  int64_t lb = 0;
  int64_t ub = iterative_upper_bound(n, d, 0);
  result.stats.iterative_ubs.push_back(ub);
  int deficient = 0;
  bool timed_out = false;

  while (ub > lb) {
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    const double remaining = cfg.time_limit_s - elapsed;
    if (remaining <= 0) {
      timed_out = true;
      break;
    }
    int64_t round_value = -1;
    // With every vertex of degree exactly d the degree sum n*d must be even.
    const bool parity_infeasible =
        deficient == 0 && (static_cast<int64_t>(n) * d) % 2 != 0;
    if (!parity_infeasible) {
      SolverConfig round_cfg = cfg;
      round_cfg.time_limit_s = remaining;
      const SearchNode root = iterative_root(n, deficient, cfg.degree_order_cut);
      SolveResult r = solve_node(root, d, round_cfg, lb);
      result.stats.nodes += r.stats.nodes;
      result.stats.orbit_s += r.stats.orbit_s;
      result.stats.orbit_calls += r.stats.orbit_calls;
      result.stats.orbit_depth_limit =
          std::max(result.stats.orbit_depth_limit, r.stats.orbit_depth_limit);
      if (r.incumbent) {
        lb = r.lb;
        round_value = r.lb;
        result.incumbent = r.incumbent;
      }
      if (r.status == SolveStatus::kTimeLimit) {
        result.stats.iterative_round_values.push_back(round_value);
        timed_out = true;
        break;
      }
    }
    result.stats.iterative_round_values.push_back(round_value);
    ++deficient;
    // Past the last round every class assignment has been searched.
    ub = deficient > n ? lb : std::max(iterative_upper_bound(n, d, deficient), lb);
    result.stats.iterative_ubs.push_back(ub);
  }

  result.lb = lb;
  result.ub = ub;
  result.status = timed_out ? SolveStatus::kTimeLimit : SolveStatus::kOptimal;
  result.stats.wall_s = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

SolveResult solve(const Instance& inst, const SolverConfig& cfg) {
  switch (cfg.method) {
    case Method::kBasic:
    case Method::kOrbital:
      return solve_basic(inst, cfg);
    case Method::kIterative:
    case Method::kIterativeOrbital:
      return solve_iterative(inst, cfg);
    case Method::kOracle: {
      const auto start = Clock::now();
      auto [value, graph] = brute_force_max(inst.num_vertices(), inst.d);
      SolveResult r;
      r.lb = r.ub = value;
      r.incumbent = std::move(graph);
      r.status = SolveStatus::kOptimal;
      r.stats.wall_s = std::chrono::duration<double>(Clock::now() - start).count();
      return r;
    }
  }
  throw std::invalid_argument("unknown method");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kBasic:
      return "Basic";
    case Method::kOrbital:
      return "Orbital";
    case Method::kIterative:
      return "Iterative";
    case Method::kIterativeOrbital:
      return "IterativeOrbital";
    case Method::kOracle:
      return "Oracle";
  }
  return "?";
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal:
      return "Optimal";
    case SolveStatus::kTimeLimit:
      return "TimeLimit";
    case SolveStatus::kInfeasible:
      return "Infeasible";
  }
  return "?";
}

std::string to_string(BranchRule r) {
  return r == BranchRule::kMaxOrbit ? "MaxOrbit" : "MaxSaturationLex";
}

std::string to_string(PairRule r) {
  return r == PairRule::kFirstFail ? "FirstFail" : "MaxSaturationLex";
}

std::string to_string(const OrbitDepthCutoff& c) {
  switch (c.kind) {
    case OrbitDepthCutoff::Kind::kAdaptive:
      return "adaptive";
    case OrbitDepthCutoff::Kind::kOff:
      return "off";
    case OrbitDepthCutoff::Kind::kFixed:
      return std::to_string(c.depth);
  }
  return "?";
}

Method method_from_string(const std::string& s) {
  for (Method m : {Method::kBasic, Method::kOrbital, Method::kIterative,
                   Method::kIterativeOrbital, Method::kOracle}) {
    if (to_string(m) == s) return m;
  }
  throw std::invalid_argument("unknown method '" + s + "'");
}

BranchRule branch_rule_from_string(const std::string& s) {
  if (s == "MaxOrbit") return BranchRule::kMaxOrbit;
  if (s == "MaxSaturationLex") return BranchRule::kMaxSaturationLex;
  throw std::invalid_argument("unknown branch rule '" + s + "'");
}

PairRule pair_rule_from_string(const std::string& s) {
  if (s == "MaxSaturationLex") return PairRule::kMaxSaturationLex;
  if (s == "FirstFail") return PairRule::kFirstFail;
  throw std::invalid_argument("unknown pair rule '" + s + "'");
}

OrbitDepthCutoff orbit_cutoff_from_string(const std::string& s) {
  if (s == "adaptive") return OrbitDepthCutoff::Adaptive();
  if (s == "off") return OrbitDepthCutoff::Off();
  size_t used = 0;
  int k = -1;
  try {
    k = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || k < 0) {
    throw std::invalid_argument("orbit depth must be adaptive, off or a depth >= 0");
  }
  return OrbitDepthCutoff::Fixed(k);
}

SolveStatus status_from_string(const std::string& s) {
  for (SolveStatus st :
       {SolveStatus::kOptimal, SolveStatus::kTimeLimit, SolveStatus::kInfeasible}) {
    if (to_string(st) == s) return st;
  }
  throw std::invalid_argument("unknown status '" + s + "'");
}

}  // namespace trifree
