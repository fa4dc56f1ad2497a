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

// Composition of extremal graphs from d-stars and extremal components.
//
// A component with matching number i (d <= i <= Z(d)) has volume i and
// utility f_delta(d, i) - d*i; the leftover matching capacity is filled with
// d-stars, each worth d edges per unit of matching number. The objective is
//
//   d*m + sum_i (f_delta(d, i) - d*i) * x_i   subject to   sum_i i*x_i <= m.

#ifndef TRIFREE_KNAPSACK_HPP_
#define TRIFREE_KNAPSACK_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace trifree {

struct KnapsackPlan {
  int d = 0;
  int m = 0;
  std::map<int, int64_t> counts;  // matching number -> copies (x_i)
  int64_t star_count = 0;
  int64_t objective = 0;

  int64_t used_volume() const;
  int64_t component_count() const;
};

class MissingUtilityError : public std::invalid_argument {
 public:
  explicit MissingUtilityError(int i)
      : std::invalid_argument("no utility for matching number " +
                              std::to_string(i)),
        i_(i) {}
  int matching_number() const { return i_; }

 private:
  int i_;
};

// utilities[i] = f_delta(d, i) for every i in [d, Z(d)]. Among optimal plans
// the result maximises x_{Z(d)}, then minimises the number of components,
// then maximises the star count. Throws UnknownZError / MissingUtilityError.
KnapsackPlan solve_knapsack(int d, int m, const std::map<int, int64_t>& utilities);

// f_delta(d, i) for i in [d, Z(d)], from settled cases only unless
// assume_conjecture is set.
std::map<int, int64_t> component_utilities(int d, bool assume_conjecture);

// At most one component with matching number below Z(d).
bool check_special_structure(const KnapsackPlan& plan);

}  // namespace trifree

#endif  // TRIFREE_KNAPSACK_HPP_
