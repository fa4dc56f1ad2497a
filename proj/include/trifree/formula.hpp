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

// Closed-form edge counts for degree- and matching-bounded graphs.

#ifndef TRIFREE_FORMULA_HPP_
#define TRIFREE_FORMULA_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

namespace trifree {

// Maximum degree d and matching bound m. Components searched by the solver
// are factor-critical, so they have exactly 2m+1 vertices.
struct Instance {
  int d = 2;
  int m = 1;

  int num_vertices() const { return 2 * m + 1; }
  friend bool operator==(const Instance&, const Instance&) = default;
};

// Z(d): smallest matching number of a d-regular (d even) or almost d-regular
// (d odd) triangle-free factor-critical graph.
struct ZValue {
  enum class Kind { kExact, kRange };
  Kind kind = Kind::kExact;
  int lo = 0;
  int hi = 0;

  bool exact() const { return kind == Kind::kExact; }
  int value() const;  // throws std::logic_error for a range

  static ZValue Exact(int v) { return {Kind::kExact, v, v}; }
  static ZValue Range(int lo, int hi) { return {Kind::kRange, lo, hi}; }
};

class UnknownZError : public std::domain_error {
 public:
  explicit UnknownZError(int d)
      : std::domain_error("Z(" + std::to_string(d) + ") is not known exactly"),
        d_(d) {}
  int d() const { return d_; }

 private:
  int d_;
};

class UnknownCaseError : public std::domain_error {
 public:
  UnknownCaseError(int d, int m)
      : std::domain_error("f_delta(" + std::to_string(d) + "," +
                          std::to_string(m) +
                          ") is not a settled case; pass assume_conjecture"),
        d_(d),
        m_(m) {}
  int d() const { return d_; }
  int m() const { return m_; }

 private:
  int d_;
  int m_;
};

int64_t f_gen(int d, int m);
ZValue z_of(int d);

// Edge-extremal count for triangle-free graphs with max degree <= d and
// matching number <= m. Without assume_conjecture only settled cases are
// answered; the rest raise UnknownCaseError.
int64_t f_delta(int d, int m, bool assume_conjecture);

// The general formula evaluated with m = k*Z(d) + r, no case checks.
int64_t f_delta_formula(int d, int m);

// Whether (d,m) is covered by the closed-form theorem (d >= m, d <= 6, or
// Z(d) <= m < 2d).
bool solved_by_theorem(int d, int m);

// floor((2m+1) * d / 2): the degree-sum ceiling on 2m+1 vertices.
int64_t precomputed_ub(int d, int m);

// Optimum proved by exhaustive search (LB = UB rows of the solver tables).
struct SettledOptimum {
  int d;
  int m;
  int64_t edges;
  const char* source;  // table and row the value comes from
};

std::span<const SettledOptimum> settled_optima();
std::optional<int64_t> settled_optimum(int d, int m);

}  // namespace trifree

#endif  // TRIFREE_FORMULA_HPP_
