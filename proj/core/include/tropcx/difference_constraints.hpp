// Copyright 2026 The tropcx Authors.
//
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

#ifndef TROPCX_DIFFERENCE_CONSTRAINTS_HPP_
#define TROPCX_DIFFERENCE_CONSTRAINTS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "tropcx/rational.hpp"

namespace tropcx {

// x[lhs] - x[rhs] <= bound, or < bound when strict.
struct DifferenceConstraint {
  std::size_t lhs;
  std::size_t rhs;
  Rational bound;
  bool strict = false;
};

// Exact feasibility of a system of weak and strict difference constraints
// over n rational unknowns.
//
// Runs Bellman-Ford from a virtual source on the constraint digraph (edge
// rhs -> lhs with weight bound). Strict edges carry an infinitesimal -eps, so
// weights live in the ordered group Q x Z compared lexicographically. A
// negative cycle there is either a cycle of negative rational weight or a
// zero-weight cycle through a strict edge; either makes the system
// infeasible.
class DifferenceSystem {
 public:
  explicit DifferenceSystem(std::size_t unknowns);

  std::size_t unknowns() const { return n_; }

  void add(std::size_t lhs, std::size_t rhs, const Rational& bound, bool strict = false);
  void add(const DifferenceConstraint& c) { add(c.lhs, c.rhs, c.bound, c.strict); }
  // x[a] - x[b] == value.
  void add_equality(std::size_t a, std::size_t b, const Rational& value);

  bool feasible() const { return solve().has_value(); }

  // A rational solution satisfying every constraint exactly (strict ones
  // strictly), or nullopt when infeasible.
  std::optional<std::vector<Rational>> solve() const;

  // Every constraint added so far, tightest per ordered pair.
  std::vector<DifferenceConstraint> constraints() const;

 private:
  struct Edge {
    bool present = false;
    Rational bound;
    bool strict = false;
  };

  Edge& edge(std::size_t lhs, std::size_t rhs) { return edges_[lhs * n_ + rhs]; }
  const Edge& edge(std::size_t lhs, std::size_t rhs) const { return edges_[lhs * n_ + rhs]; }

  std::size_t n_;
  std::vector<Edge> edges_;
};

// Checks a candidate solution against a list of constraints.
bool satisfies(const std::vector<Rational>& x, const std::vector<DifferenceConstraint>& constraints);

}  // namespace tropcx

#endif  // TROPCX_DIFFERENCE_CONSTRAINTS_HPP_
