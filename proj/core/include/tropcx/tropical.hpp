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

#ifndef TROPCX_TROPICAL_HPP_
#define TROPCX_TROPICAL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropcx/bool_matrix.hpp"
#include "tropcx/difference_constraints.hpp"
#include "tropcx/rational.hpp"

namespace tropcx {

using Point = std::vector<Rational>;

// The columns of an n x d rational matrix, read as apexes of min-plus
// tropical hyperplanes in R^n.
class Arrangement {
 public:
  explicit Arrangement(RationalMatrix apexes);
  static Arrangement from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const RationalMatrix& matrix() const { return m_; }
  Point apex(std::size_t j) const { return m_.column(j); }

  // Rows I and columns J, in increasing index order.
  RationalMatrix submatrix(IndexSet rows, IndexSet cols) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  RationalMatrix m_;
};

// <x|y> = min_k (y_k - x_k), the largest lambda with lambda + x <= y.
Rational residuation(std::span<const Rational> x, std::span<const Rational> y);

// True iff y_i - M_ij = min_k (y_k - M_kj): the apex of hyperplane j
// dominates y in position i.
bool dominates(const Arrangement& arr, std::size_t j, std::span<const Rational> y, std::size_t i);

// T_ij = 1 iff column j dominates x in position i.
BoolMatrix type_of_point(const Arrangement& arr, std::span<const Rational> x);

// The closed cell D_S as a weak difference system:
// x_i - x_k <= M_ij - M_kj for every S_ij = 1 and every k.
DifferenceSystem satisfiability_system(const Arrangement& arr, const BoolMatrix& s);

// The relatively open cell of T: ties inside each column are equalities,
// every other row of the column is strictly worse.
DifferenceSystem realization_system(const Arrangement& arr, const BoolMatrix& t);

// Some x with S <= type_of_point(x) exists.
bool is_satisfiable(const Arrangement& arr, const BoolMatrix& s);

// A point satisfying S (shortest-path potentials), or nullopt.
std::optional<Point> witness(const Arrangement& arr, const BoolMatrix& s);

// Some x has type exactly T. False when T has an empty column.
bool is_realized_type(const Arrangement& arr, const BoolMatrix& t);

// A point of type exactly T, or nullopt.
std::optional<Point> realizing_point(const Arrangement& arr, const BoolMatrix& t);

// u = max_l ( min(<M_l|x>, <M_l|y>) + M_l ). Satisfies u <= x, u <= y, and
// every column that dominates both x and y in position p dominates u there.
Point combine_satisfiers(const Arrangement& arr, std::span<const Rational> x,
                         std::span<const Rational> y);

// y* = max_j ( <M_j|y> + M_j ). y* <= y, with equality iff y lies in the
// max-plus column space of M.
Point column_space_projection(const Arrangement& arr, std::span<const Rational> y);
bool in_column_space(const Arrangement& arr, std::span<const Rational> y);

// (v_1 - v_n, ..., v_{n-1} - v_n). Requires n >= 2.
Point project_to_plane(std::span<const Rational> v);

// Adds c to every coordinate.
Point translate(std::span<const Rational> v, const Rational& c);

}  // namespace tropcx

#endif  // TROPCX_TROPICAL_HPP_
