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

// Command-line front end.
//
//   trifree formula   --d 8 --m 10
//   trifree construct --kind b --d 7 --t 1 --emit-graph b71.g6
//   trifree solve     --d 7 --m 8 --method IterativeOrbital
//   trifree knapsack  --d 8 --m 20 --emit-graph k.g6
//   trifree verify    --graph b71.g6 --d 7 --m 8
//   trifree table     --name table5
//   trifree orbits    --n 17 --one 0-1
//
// Output is one JSON object per line unless --pretty is given. Exit codes:
// 0 ok, 1 verification mismatch, 2 usage error, 3 time limit.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "trifree/components.hpp"
#include "trifree/constructions.hpp"
#include "trifree/formula.hpp"
#include "trifree/graph.hpp"
#include "trifree/graph6.hpp"
#include "trifree/knapsack.hpp"
#include "trifree/run_record.hpp"
#include "trifree/search.hpp"
#include "trifree/symmetry.hpp"
#include "trifree/tables.hpp"

namespace {

using nlohmann::json;
using namespace trifree;

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kTimeLimit = 3 };

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

double default_time_limit() {
  if (const char* env = std::getenv("TRIFREE_TIME_LIMIT")) {
    try {
      const double v = std::stod(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("TRIFREE_TIME_LIMIT must be a positive number");
  }
  return 3600.0;
}

json graph_report(const Graph& g) {
  std::map<int, int> degree_counts;
  for (Vertex v = 0; v < g.num_vertices(); ++v) ++degree_counts[g.degree(v)];
  json degrees = json::object();
  for (const auto& [deg, count] : degree_counts) degrees[std::to_string(deg)] = count;
  return json{{"n", g.num_vertices()},
              {"edges", g.num_edges()},
              {"triangle_free", is_triangle_free(g)},
              {"max_degree", g.max_degree()},
              {"matching_number", max_matching(g).size()},
              {"factor_critical", is_factor_critical(g)},
              {"degree_counts", degrees},
              {"graph6", to_graph6(g)}};
}

// f_delta with the basis it rests on: theorem, computation or conjecture.
std::pair<std::optional<int64_t>, std::string> f_delta_with_basis(int d, int m,
                                                                  bool assume_conjecture) {
  if (!z_of(d).exact()) return {std::nullopt, "unknown"};
  if (solved_by_theorem(d, m)) return {f_delta(d, m, false), "theorem"};
  if (auto v = settled_optimum(d, m)) return {*v, "computation"};
  if (assume_conjecture) return {f_delta(d, m, true), "conjecture"};
  return {std::nullopt, "unknown"};
}

void write_graph(const std::string& path, const Graph& g) {
  if (!path.empty()) write_graph6_file(path, g);
}

struct Outcome {
  json output;
  std::vector<json> lines;  // extra output lines (table rows)
  int code = kOk;
};

std::string render_pretty(const Outcome& out) {
  std::ostringstream os;
  if (!out.lines.empty()) {
    for (const json& row : out.lines) {
      os << std::left << std::setw(15) << row.value("source", "");
      os << " d=" << std::setw(3) << row.value("d", 0) << " m=" << std::setw(3) << row.value("m", 0);
      for (const json& c : row.at("cells")) {
        os << "  " << c.at("column").get<std::string>() << " " << c.at("expected") << "/"
           << c.at("actual");
      }
      if (row.contains("status")) os << "  " << row.at("status").get<std::string>();
      os << (row.at("match").get<bool>() ? "  ok" : "  MISMATCH") << "\n";
    }
  }
  for (const auto& [key, value] : out.output.items()) {
    if (key == "row_results") continue;
    os << std::left << std::setw(20) << key << " " << value.dump() << "\n";
  }
  return os.str();
}

struct Options {
  int d = 0;
  int m = 0;
  int t = 0;
  bool assume_conjecture = false;
  std::string kind = "b";
  std::string method = "IterativeOrbital";
  std::optional<double> time_limit;
  int workers = 1;
  bool deterministic = true;
  std::string orbit_depth = "adaptive";
  std::string branch_rule = "MaxOrbit";
  std::string pair_rule = "MaxSaturationLex";
  bool no_order_cut = false;
  uint64_t seed = 0;
  std::string emit_graph;
  std::string graph_path;
  std::string table_name;
  std::optional<int> only_d;
  std::optional<int> only_m;
  int n = 0;
  int deficient = 0;
  std::vector<std::string> fix_one;
  std::vector<std::string> fix_zero;
};

SolverConfig solver_config(const Options& o) {
  SolverConfig cfg;
  cfg.method = method_from_string(o.method);
  cfg.time_limit_s = o.time_limit ? *o.time_limit : default_time_limit();
  cfg.orbit_depth_cutoff = orbit_cutoff_from_string(o.orbit_depth);
  cfg.branch_rule = branch_rule_from_string(o.branch_rule);
  cfg.pair_rule = pair_rule_from_string(o.pair_rule);
  cfg.workers = o.workers;
  cfg.deterministic = o.deterministic;
  cfg.degree_order_cut = !o.no_order_cut;
  cfg.seed = o.seed;
  if (cfg.time_limit_s <= 0) throw UsageError("--time-limit must be > 0");
  return cfg;
}

Outcome cmd_formula(const Options& o) {
  Outcome out;
  const ZValue z = z_of(o.d);
  json zj = z.exact() ? json{{"exact", z.value()}} : json{{"lo", z.lo}, {"hi", z.hi}};
  const auto [fd, basis] = f_delta_with_basis(o.d, o.m, o.assume_conjecture);
  out.output = json{{"d", o.d},
                    {"m", o.m},
                    {"f_gen", f_gen(o.d, o.m)},
                    {"z", zj},
                    {"f_delta", fd ? json(*fd) : json(nullptr)},
                    {"f_delta_basis", basis},
                    {"precomputed_ub", precomputed_ub(o.d, o.m)}};
  return out;
}

Outcome cmd_construct(const Options& o) {
  Outcome out;
  Graph g;
  json params{{"kind", o.kind}, {"d", o.d}};
  if (o.kind == "star") {
    g = d_star(o.d);
  } else if (o.kind == "general") {
    if (o.m < 1) throw UsageError("--kind general needs --m >= 1");
    g = general_extremal(o.d, o.m);
    params["m"] = o.m;
  } else if (o.kind == "b") {
    g = b_graph(o.d, o.t);
    params["t"] = o.t;
  } else {
    throw UsageError("--kind must be star, general or b");
  }
  write_graph(o.emit_graph, g);
  out.output = params;
  out.output.update(graph_report(g));
  return out;
}

Outcome cmd_solve(const Options& o) {
  Outcome out;
  const SolverConfig cfg = solver_config(o);
  const Instance inst{o.d, o.m};
  const SolveResult r = solve(inst, cfg);
  if (r.incumbent) write_graph(o.emit_graph, *r.incumbent);
  out.output = to_json(inst, cfg, r);
  if (r.status == SolveStatus::kTimeLimit) out.code = kTimeLimit;
  return out;
}

Outcome cmd_knapsack(const Options& o) {
  Outcome out;
  const KnapsackPlan plan = solve_knapsack(o.d, o.m, component_utilities(o.d, o.assume_conjecture));
  out.output = to_json(plan);
  const int z = z_of(o.d).value();
  int64_t others = 0;
  for (const auto& [i, x] : plan.counts) {
    if (i != z) others += x;
  }
  out.output["z_components"] = plan.counts.at(z);
  out.output["other_components"] = others;
  if (!o.emit_graph.empty()) {
    SolverConfig cfg = solver_config(o);
    cfg.method = Method::kIterativeOrbital;
    std::map<int, Graph> parts;
    try {
      parts = plan_components(plan, cfg);
    } catch (const MissingComponentError& e) {
      std::cerr << "error: " << e.what() << "\n";
      out.code = kTimeLimit;
      return out;
    }
    const Graph g = assemble(plan, parts);
    write_graph(o.emit_graph, g);
    out.output["graph"] = graph_report(g);
    if (g.num_edges() != plan.objective) out.code = kMismatch;
  }
  return out;
}

Outcome cmd_verify(const Options& o) {
  Outcome out;
  std::vector<Graph> graphs;
  try {
    graphs = read_graph6_file(o.graph_path);
  } catch (const Graph6Error& e) {
    throw UsageError(std::string("bad graph6 input: ") + e.what());
  }
  if (graphs.empty()) throw UsageError("no graph in " + o.graph_path);
  const Graph& g = graphs.front();
  json report = graph_report(g);
  const auto [fd, basis] = f_delta_with_basis(o.d, o.m, true);
  const int nu = report.at("matching_number").get<int>();
  json checks{{"triangle_free", report.at("triangle_free").get<bool>()},
              {"max_degree", g.max_degree() <= o.d},
              {"matching_number", nu <= o.m},
              {"edge_count", fd ? json(g.num_edges() == *fd) : json(nullptr)}};
  bool pass = true;
  for (const auto& [name, value] : checks.items()) {
    if (value.is_boolean() && !value.get<bool>()) pass = false;
  }
  out.output = json{{"graph", o.graph_path}, {"d", o.d}, {"m", o.m}};
  out.output.update(report);
  out.output["f_delta"] = fd ? json(*fd) : json(nullptr);
  out.output["f_delta_basis"] = basis;
  out.output["checks"] = checks;
  out.output["pass"] = pass;
  if (!pass) out.code = kMismatch;
  return out;
}

Outcome cmd_table(const Options& o) {
  Outcome out;
  TableOptions options;
  if (is_solver_table(o.table_name)) options.solver = solver_config(o);
  options.only_d = o.only_d;
  options.only_m = o.only_m;
  const TableReport report = run_table(o.table_name, options);
  for (const TableRowResult& row : report.rows) {
    json cells = json::array();
    for (const TableCell& c : row.cells) {
      cells.push_back(json{{"column", c.column},
                           {"expected", c.expected},
                           {"actual", c.actual ? json(*c.actual) : json(nullptr)},
                           {"match", c.match}});
    }
    json line{{"source", row.source}, {"d", row.d}, {"m", row.m}, {"cells", cells}, {"match", row.match}};
    if (row.status) line["status"] = to_string(*row.status);
    out.lines.push_back(line);
  }
  out.output = json{{"table", report.name},
                    {"rows", report.rows.size()},
                    {"all_match", report.all_match},
                    {"timed_out", report.timed_out},
                    {"wall_s", report.wall_s}};
  out.output["row_results"] = out.lines;
  if (!report.all_match) {
    out.code = kMismatch;
  } else if (report.timed_out) {
    out.code = kTimeLimit;
  }
  return out;
}

Edge parse_pair(const std::string& text) {
  const auto dash = text.find('-');
  try {
    if (dash == std::string::npos) throw std::invalid_argument(text);
    return Edge(std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1)));
  } catch (const std::exception&) {
    throw UsageError("pairs are written u-v, got '" + text + "'");
  }
}

Outcome cmd_orbits(const Options& o) {
  Outcome out;
  std::vector<int> colors(o.n, 0);
  if (o.deficient < 0 || o.deficient > o.n) throw UsageError("--deficient out of range");
  for (int i = 0; i < o.deficient; ++i) colors[o.n - 1 - i] = 1;
  ColoredModel model(o.n, colors);
  auto fix = [&](const std::vector<std::string>& pairs, PairColor c) {
    for (const std::string& p : pairs) {
      const Edge e = parse_pair(p);
      if (e.u < 0 || e.v >= o.n || e.u == e.v) throw UsageError("pair out of range: " + p);
      model.set_color(e.u, e.v, c);
    }
  };
  fix(o.fix_one, PairColor::kFixedOne);
  fix(o.fix_zero, PairColor::kFixedZero);
  SymmetryStats stats;
  const auto gens = automorphism_generators(model, {}, &stats);
  const OrbitPartition part = orbits_from_generators(model, gens);
  json sizes = json::array();
  json reps = json::array();
  for (size_t i = 0; i < part.classes.size(); ++i) {
    sizes.push_back(part.classes[i].size());
    const Edge& r = part.representative(i);
    reps.push_back(std::to_string(r.u) + "-" + std::to_string(r.v));
  }
  out.output = json{{"n", o.n},
                    {"generators", gens.size()},
                    {"class_sizes", sizes},
                    {"representatives", reps},
                    {"search_nodes", stats.search_nodes},
                    {"complete", stats.complete}};
  return out;
}

json options_json(const std::string& command, const Options& o) {
  json j{{"d", o.d}, {"m", o.m}};
  if (command == "construct") {
    j["kind"] = o.kind;
    j["t"] = o.t;
  }
  if (command == "formula" || command == "knapsack") j["assume_conjecture"] = o.assume_conjecture;
  if (command == "solve" || command == "table" || (command == "knapsack" && !o.emit_graph.empty())) {
    j["solver"] = to_json(solver_config(o));
  }
  if (command == "verify") j["graph"] = o.graph_path;
  if (command == "orbits") {
    j = json{{"n", o.n}, {"deficient", o.deficient}, {"fix_one", o.fix_one}, {"fix_zero", o.fix_zero}};
  }
  if (command == "table") {
    j = json{{"name", o.table_name}};
    if (is_solver_table(o.table_name)) j["solver"] = to_json(solver_config(o));
    if (o.only_d) j["only_d"] = *o.only_d;
    if (o.only_m) j["only_m"] = *o.only_m;
  }
  if (!o.emit_graph.empty()) j["emit_graph"] = o.emit_graph;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-extremal triangle-free graphs with bounded degree and matching number"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  std::string out_path;
  app.add_flag("--pretty", pretty, "Human-readable output");
  app.add_option("--out", out_path, "Write a JSON run record to this file");

  Options o;
  auto add_dm = [&o](CLI::App* sub, bool need_m) {
    sub->add_option("--d", o.d, "Maximum degree")->required()->check(CLI::Range(2, 64));
    auto* m = sub->add_option("--m", o.m, "Matching number bound")->check(CLI::Range(1, 1 << 24));
    if (need_m) m->required();
  };
  auto add_solver = [&o](CLI::App* sub) {
    sub->add_option("--time-limit", o.time_limit, "Seconds (default $TRIFREE_TIME_LIMIT or 3600)");
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--deterministic", o.deterministic, "Single worker, fixed order (true/false)");
    sub->add_option("--orbit-depth", o.orbit_depth, "adaptive, off or a fixed depth");
    sub->add_option("--branch-rule", o.branch_rule, "MaxOrbit or MaxSaturationLex");
    sub->add_option("--pair-rule", o.pair_rule, "MaxSaturationLex or FirstFail");
    sub->add_flag("--no-order-cut", o.no_order_cut, "Disable the degree-ordering cut");
    sub->add_option("--seed", o.seed, "Reorders parallel work; no effect when deterministic");
  };

  auto* formula = app.add_subcommand("formula", "Closed-form values for (d, m)");
  add_dm(formula, true);
  formula->add_flag("--assume-conjecture", o.assume_conjecture);

  auto* construct = app.add_subcommand("construct", "Build a witness graph");
  add_dm(construct, false);
  construct->add_option("--kind", o.kind, "star, general or b")
      ->check(CLI::IsMember({"star", "general", "b"}));
  construct->add_option("--t", o.t, "Shift count for --kind b")->check(CLI::NonNegativeNumber);
  construct->add_option("--emit-graph", o.emit_graph, "graph6 output file");

  auto* solve_cmd = app.add_subcommand("solve", "Branch-and-bound search");
  add_dm(solve_cmd, true);
  solve_cmd->add_option("--method", o.method, "Basic, Orbital, Iterative, IterativeOrbital or Oracle")
      ->check(CLI::IsMember({"Basic", "Orbital", "Iterative", "IterativeOrbital", "Oracle"}));
  add_solver(solve_cmd);
  solve_cmd->add_option("--emit-graph", o.emit_graph, "graph6 file for the incumbent");

  auto* knapsack = app.add_subcommand("knapsack", "Compose an extremal graph from components");
  add_dm(knapsack, true);
  knapsack->add_flag("--assume-conjecture", o.assume_conjecture);
  knapsack->add_option("--emit-graph", o.emit_graph, "graph6 file for the assembled graph");
  knapsack->add_option("--time-limit", o.time_limit, "Seconds per component search");

  auto* verify = app.add_subcommand("verify", "Check a graph6 file against f_delta(d, m)");
  add_dm(verify, true);
  verify->add_option("--graph", o.graph_path, "graph6 file")->required();

  auto* table = app.add_subcommand("table", "Reproduce a result table");
  table->add_option("--name", o.table_name, "table1 .. table6")
      ->required()
      ->check(CLI::IsMember(table_names()));
  add_solver(table);
  table->add_option("--only-d", o.only_d, "Restrict solver tables to one d");
  table->add_option("--only-m", o.only_m, "Restrict solver tables to one m");

  auto* orbit_cmd = app.add_subcommand("orbits", "Orbit sizes of free pairs in a partial model");
  orbit_cmd->add_option("--n", o.n, "Vertex count")->required()->check(CLI::Range(1, kMaxVertices));
  orbit_cmd->add_option("--deficient", o.deficient, "Give the last k vertices their own colour");
  orbit_cmd->add_option("--one", o.fix_one, "Pairs fixed to one, e.g. 0-1");
  orbit_cmd->add_option("--zero", o.fix_zero, "Pairs fixed to zero");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Outcome out;
  RunRecord record;
  record.timestamp = utc_timestamp();
  record.command = command;
  try {
    record.config = options_json(command, o);
    if (command == "formula") out = cmd_formula(o);
    if (command == "construct") out = cmd_construct(o);
    if (command == "solve") out = cmd_solve(o);
    if (command == "knapsack") out = cmd_knapsack(o);
    if (command == "verify") out = cmd_verify(o);
    if (command == "table") out = cmd_table(o);
    if (command == "orbits") out = cmd_orbits(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (pretty) {
    std::cout << render_pretty(out);
  } else {
    for (const json& line : out.lines) std::cout << line.dump() << "\n";
    json summary = out.output;
    summary.erase("row_results");
    std::cout << summary.dump() << "\n";
  }
  if (!out_path.empty()) {
    record.output = out.output;
    std::ofstream f(out_path);
    f << to_json(record).dump(2) << "\n";
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kUsage;
    }
  }
  return out.code;
}
