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

// Batch reproduction of the published result tables.
//
//   table1  Basic              d, m, PreUB, LB, UB
//   table2  Orbital            d, m, PreUB, LB, UB
//   table3  Iterative          d, m, PreUB, LB, UB
//   table4  IterativeOrbital   d, m, PreUB, LB, UB
//   table5  knapsack, d = 7..10 and 2d < m <= 3d: edges, #star, #Z(d), #other
//   table6  knapsack, d = 8 and 15 <= m <= 47: edges, #star, comp_8..comp_10
//
// Knapsack rows must match exactly. Solver rows run under a time limit; a
// row matches when PreUB agrees and the solver's bounds do not contradict
// the published ones (our lb <= their UB, our ub >= their LB, and equal
// optima whenever both sides proved one).

#ifndef TRIFREE_TABLES_HPP_
#define TRIFREE_TABLES_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trifree/search.hpp"

namespace trifree {

struct KnapsackTableRow {
  int d;
  int m;
  int64_t edges;
  int64_t stars;
  int64_t z_components;
  int64_t other_components;
};

struct KnapsackDegree8Row {
  int m;
  int64_t edges;
  int64_t stars;
  int64_t comp8;
  int64_t comp9;
  int64_t comp10;
};

struct SolverTableRow {
  int d;
  int m;
  int64_t pre_ub;
  int64_t lb;
  int64_t ub;
};

std::span<const KnapsackTableRow> expected_table5();
std::span<const KnapsackDegree8Row> expected_table6();
// name is one of table1..table4.
std::span<const SolverTableRow> expected_solver_table(const std::string& name);

struct TableCell {
  std::string column;
  int64_t expected = 0;
  std::optional<int64_t> actual;
  bool match = false;
};

struct TableRowResult {
  int d = 0;
  int m = 0;
  std::string source;  // e.g. "table5 row 3"
  std::vector<TableCell> cells;
  std::optional<SolveStatus> status;  // solver tables only
  bool match = false;
};

struct TableReport {
  std::string name;
  std::vector<TableRowResult> rows;
  bool all_match = false;
  bool timed_out = false;  // some solver row hit its limit
  double wall_s = 0.0;
};

struct TableOptions {
  SolverConfig solver;       // method is taken from the table
  std::optional<int> only_d;  // restrict solver tables to one d
  std::optional<int> only_m;
};

std::vector<std::string> table_names();
bool is_solver_table(const std::string& name);

// Throws std::invalid_argument for an unknown name.
TableReport run_table(const std::string& name, const TableOptions& options = {});

}  // namespace trifree

#endif  // TRIFREE_TABLES_HPP_
