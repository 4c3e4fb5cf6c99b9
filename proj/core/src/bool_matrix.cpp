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

#include "tropcx/bool_matrix.hpp"

#include <stdexcept>
#include <string>

namespace tropcx {
namespace {

void check_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("boolean matrix needs positive dimensions");
  if (rows > kMaxIndex || cols > kMaxIndex) {
    throw std::invalid_argument("boolean matrix dimensions are limited to " +
                                std::to_string(kMaxIndex));
  }
}

}  // namespace

std::vector<std::size_t> to_indices(IndexSet s) {
  std::vector<std::size_t> out;
  out.reserve(cardinality(s));
  for_each_index(s, [&](std::size_t i) { out.push_back(i); });
  return out;
}

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, 0) {
  check_shape(rows, cols);
}

BoolMatrix BoolMatrix::from_columns(std::size_t rows, std::span<const IndexSet> columns) {
  BoolMatrix out(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (!is_subset(columns[j], full_set(rows))) {
      throw std::invalid_argument("column " + std::to_string(j) + " mentions a row outside the matrix");
    }
    for_each_index(columns[j], [&](std::size_t i) { out.rows_[i] |= singleton(j); });
  }
  return out;
}

BoolMatrix BoolMatrix::from_rows(std::size_t cols, std::span<const IndexSet> rows) {
  BoolMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!is_subset(rows[i], full_set(cols))) {
      throw std::invalid_argument("row " + std::to_string(i) + " mentions a column outside the matrix");
    }
    out.rows_[i] = rows[i];
  }
  return out;
}

BoolMatrix BoolMatrix::from_grid(const std::vector<std::vector<int>>& grid) {
  if (grid.empty()) throw std::invalid_argument("boolean matrix needs positive dimensions");
  BoolMatrix out(grid.size(), grid.front().size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].size() != out.cols_) throw std::invalid_argument("ragged boolean matrix rows");
    for (std::size_t j = 0; j < out.cols_; ++j) {
      if (grid[i][j] != 0 && grid[i][j] != 1) throw std::invalid_argument("entries must be 0 or 1");
      if (grid[i][j] == 1) out.rows_[i] |= singleton(j);
    }
  }
  return out;
}

BoolMatrix BoolMatrix::ones(std::size_t rows, std::size_t cols) {
  BoolMatrix out(rows, cols);
  for (auto& r : out.rows_) r = full_set(cols);
  return out;
}

void BoolMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= rows() || j >= cols_) throw std::out_of_range("boolean matrix index out of range");
  if (value) {
    rows_[i] |= singleton(j);
  } else {
    rows_[i] &= ~singleton(j);
  }
}

IndexSet BoolMatrix::column(std::size_t j) const {
  IndexSet out = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out |= ((rows_[i] >> j) & 1U) << i;
  }
  return out;
}

std::vector<IndexSet> BoolMatrix::columns() const {
  std::vector<IndexSet> out(cols_, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for_each_index(rows_[i], [&](std::size_t j) { out[j] |= singleton(i); });
  }
  return out;
}

std::size_t BoolMatrix::count() const {
  std::size_t total = 0;
  for (IndexSet r : rows_) total += cardinality(r);
  return total;
}

bool BoolMatrix::has_empty_column() const {
  IndexSet seen = 0;
  for (IndexSet r : rows_) seen |= r;
  return seen != full_set(cols_);
}

bool BoolMatrix::has_empty_row() const {
  for (IndexSet r : rows_) {
    if (r == 0) return true;
  }
  return false;
}

std::strong_ordering operator<=>(const BoolMatrix& a, const BoolMatrix& b) {
  if (auto c = a.rows() <=> b.rows(); c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return a.rows_ <=> b.rows_;
}

bool leq(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("leq: boolean matrices differ in shape");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!is_subset(a.row(i), b.row(i))) return false;
  }
  return true;
}

BoolMatrix transpose(const BoolMatrix& a) {
  const auto cols = a.columns();
  return BoolMatrix::from_rows(a.rows(), cols);
}

bool is_partial_bijection(const BoolMatrix& a) {
  IndexSet seen_cols = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const IndexSet r = a.row(i);
    if (cardinality(r) > 1 || (r & seen_cols) != 0) return false;
    seen_cols |= r;
  }
  return true;
}

void PartialBijection::add(std::size_t row, std::size_t col) {
  if (row >= kMaxIndex || col >= kMaxIndex) throw std::out_of_range("partial bijection index out of range");
  if (contains(domain_, col) || contains(image_, row)) {
    throw std::invalid_argument("partial bijection would not be injective");
  }
  domain_ |= singleton(col);
  image_ |= singleton(row);
  row_of_[col] = static_cast<std::uint8_t>(row);
}

std::vector<std::pair<std::size_t, std::size_t>> PartialBijection::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for_each_index(domain_, [&](std::size_t j) { out.emplace_back(row_of_[j], j); });
  return out;
}

BoolMatrix PartialBijection::to_matrix(std::size_t rows, std::size_t cols) const {
  BoolMatrix out(rows, cols);
  for_each_index(domain_, [&](std::size_t j) { out.set(row_of_[j], j); });
  return out;
}

PartialBijection PartialBijection::from_matrix(const BoolMatrix& a) {
  if (!is_partial_bijection(a)) throw std::invalid_argument("matrix is not a partial bijection");
  PartialBijection out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for_each_index(a.row(i), [&](std::size_t j) { out.add(i, j); });
  }
  return out;
}

bool PartialBijection::contained_in(const BoolMatrix& a) const {
  bool ok = true;
  for_each_index(domain_, [&](std::size_t j) {
    if (ok && (row_of_[j] >= a.rows() || j >= a.cols() || !a.get(row_of_[j], j))) ok = false;
  });
  return ok;
}

bool operator==(const PartialBijection& a, const PartialBijection& b) {
  if (a.domain_ != b.domain_ || a.image_ != b.image_) return false;
  bool same = true;
  for_each_index(a.domain_, [&](std::size_t j) { same = same && a.row_of_[j] == b.row_of_[j]; });
  return same;
}

std::strong_ordering operator<=>(const PartialBijection& a, const PartialBijection& b) {
  return a.pairs() <=> b.pairs();
}

std::vector<PartialBijection> contained_partial_bijections(const BoolMatrix& a) {
  std::vector<PartialBijection> out;
  for_each_contained_partial_bijection(a, [&](const PartialBijection& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace tropcx
