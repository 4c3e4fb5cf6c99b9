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

#include "tropcx/tropical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace tropcx {
namespace {

void check_point(const Arrangement& arr, std::span<const Rational> x, const char* what) {
  if (x.size() != arr.rows()) {
    throw std::invalid_argument(std::string(what) + ": point has " + std::to_string(x.size()) +
                                " coordinates, arrangement has " + std::to_string(arr.rows()) + " rows");
  }
}

void check_shape(const Arrangement& arr, const BoolMatrix& s, const char* what) {
  if (s.rows() != arr.rows() || s.cols() != arr.cols()) {
    throw std::invalid_argument(std::string(what) + ": boolean matrix shape does not match the arrangement");
  }
}

// min_k (y_k - M_kj)
Rational column_residuation(const Arrangement& arr, std::size_t j, std::span<const Rational> y) {
  Rational best = y[0] - arr(0, j);
  for (std::size_t k = 1; k < arr.rows(); ++k) {
    Rational diff = y[k] - arr(k, j);
    if (diff < best) best = std::move(diff);
  }
  return best;
}

// max_l ( coeff_l + M_l ) over the columns with a coefficient.
Point max_plus_combination(const Arrangement& arr, const std::vector<std::optional<Rational>>& coeff) {
  Point out;
  for (std::size_t i = 0; i < arr.rows(); ++i) {
    std::optional<Rational> best;
    for (std::size_t l = 0; l < arr.cols(); ++l) {
      if (!coeff[l]) continue;
      Rational value = *coeff[l] + arr(i, l);
      if (!best || *best < value) best = std::move(value);
    }
    out.push_back(std::move(*best));
  }
  return out;
}

}  // namespace

Arrangement::Arrangement(RationalMatrix apexes) : m_(std::move(apexes)) {
  if (m_.rows() == 0 || m_.cols() == 0) throw std::invalid_argument("arrangement needs n >= 1 and d >= 1");
  if (m_.rows() > kMaxIndex || m_.cols() > kMaxIndex) {
    throw std::invalid_argument("arrangement dimensions are limited to 64");
  }
}

Arrangement Arrangement::from_rows(const std::vector<std::vector<Rational>>& rows) {
  return Arrangement(RationalMatrix::from_rows(rows));
}

RationalMatrix Arrangement::submatrix(IndexSet rows, IndexSet cols) const {
  const auto ri = to_indices(rows);
  const auto ci = to_indices(cols);
  RationalMatrix out(ri.size(), ci.size());
  for (std::size_t a = 0; a < ri.size(); ++a) {
    if (ri[a] >= this->rows()) throw std::out_of_range("submatrix row out of range");
    for (std::size_t b = 0; b < ci.size(); ++b) {
      if (ci[b] >= this->cols()) throw std::out_of_range("submatrix column out of range");
      out(a, b) = m_(ri[a], ci[b]);
    }
  }
  return out;
}

Rational residuation(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("residuation: length mismatch");
  Rational best = y[0] - x[0];
  for (std::size_t k = 1; k < x.size(); ++k) {
    Rational diff = y[k] - x[k];
    if (diff < best) best = std::move(diff);
  }
  return best;
}

bool dominates(const Arrangement& arr, std::size_t j, std::span<const Rational> y, std::size_t i) {
  check_point(arr, y, "dominates");
  if (i >= arr.rows() || j >= arr.cols()) throw std::out_of_range("dominates: index out of range");
  return y[i] - arr(i, j) == column_residuation(arr, j, y);
}

BoolMatrix type_of_point(const Arrangement& arr, std::span<const Rational> x) {
  check_point(arr, x, "type_of_point");
  BoolMatrix t(arr.rows(), arr.cols());
  for (std::size_t j = 0; j < arr.cols(); ++j) {
    const Rational best = column_residuation(arr, j, x);
    for (std::size_t i = 0; i < arr.rows(); ++i) {
      if (x[i] - arr(i, j) == best) t.set(i, j);
    }
  }
  return t;
}

DifferenceSystem satisfiability_system(const Arrangement& arr, const BoolMatrix& s) {
  check_shape(arr, s, "satisfiability_system");
  DifferenceSystem system(arr.rows());
  for (std::size_t j = 0; j < arr.cols(); ++j) {
    for_each_index(s.column(j), [&](std::size_t i) {
      for (std::size_t k = 0; k < arr.rows(); ++k) {
        if (k != i) system.add(i, k, arr(i, j) - arr(k, j));
      }
    });
  }
  return system;
}

DifferenceSystem realization_system(const Arrangement& arr, const BoolMatrix& t) {
  check_shape(arr, t, "realization_system");
  DifferenceSystem system(arr.rows());
  for (std::size_t j = 0; j < arr.cols(); ++j) {
    const IndexSet col = t.column(j);
    for_each_index(col, [&](std::size_t i) {
      for (std::size_t k = 0; k < arr.rows(); ++k) {
        if (k != i) system.add(i, k, arr(i, j) - arr(k, j), !contains(col, k));
      }
    });
  }
  return system;
}

bool is_satisfiable(const Arrangement& arr, const BoolMatrix& s) {
  return satisfiability_system(arr, s).feasible();
}

std::optional<Point> witness(const Arrangement& arr, const BoolMatrix& s) {
  return satisfiability_system(arr, s).solve();
}

bool is_realized_type(const Arrangement& arr, const BoolMatrix& t) {
  return realizing_point(arr, t).has_value();
}

std::optional<Point> realizing_point(const Arrangement& arr, const BoolMatrix& t) {
  check_shape(arr, t, "realizing_point");
  if (t.has_empty_column()) return std::nullopt;
  return realization_system(arr, t).solve();
}

Point combine_satisfiers(const Arrangement& arr, std::span<const Rational> x,
                         std::span<const Rational> y) {
  check_point(arr, x, "combine_satisfiers");
  check_point(arr, y, "combine_satisfiers");
  std::vector<std::optional<Rational>> coeff(arr.cols());
  for (std::size_t l = 0; l < arr.cols(); ++l) {
    Rational a = column_residuation(arr, l, x);
    Rational b = column_residuation(arr, l, y);
    coeff[l] = b < a ? std::move(b) : std::move(a);
  }
  return max_plus_combination(arr, coeff);
}

Point column_space_projection(const Arrangement& arr, std::span<const Rational> y) {
  check_point(arr, y, "column_space_projection");
  std::vector<std::optional<Rational>> coeff(arr.cols());
  for (std::size_t j = 0; j < arr.cols(); ++j) coeff[j] = column_residuation(arr, j, y);
  return max_plus_combination(arr, coeff);
}

bool in_column_space(const Arrangement& arr, std::span<const Rational> y) {
  const Point projected = column_space_projection(arr, y);
  return std::equal(projected.begin(), projected.end(), y.begin(), y.end());
}

Point project_to_plane(std::span<const Rational> v) {
  if (v.size() < 2) throw std::invalid_argument("project_to_plane needs at least two coordinates");
  Point out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(v[i] - v.back());
  return out;
}

Point translate(std::span<const Rational> v, const Rational& c) {
  Point out;
  out.reserve(v.size());
  for (const Rational& x : v) out.push_back(x + c);
  return out;
}

}  // namespace tropcx
