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

#ifndef TROPCX_BOOL_MATRIX_HPP_
#define TROPCX_BOOL_MATRIX_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tropcx {

// A subset of {0, ..., 63} stored as a bitmask. Indices are zero-based
// throughout the library; the text formats shift them to one-based.
using IndexSet = std::uint64_t;

inline constexpr std::size_t kMaxIndex = 64;

constexpr IndexSet singleton(std::size_t i) { return IndexSet{1} << i; }
constexpr IndexSet full_set(std::size_t n) {
  return n >= kMaxIndex ? ~IndexSet{0} : (IndexSet{1} << n) - 1;
}
constexpr bool contains(IndexSet s, std::size_t i) { return (s >> i) & 1U; }
constexpr bool is_subset(IndexSet a, IndexSet b) { return (a & ~b) == 0; }
constexpr std::size_t cardinality(IndexSet s) { return static_cast<std::size_t>(std::popcount(s)); }

// Calls fn(i) for every member of s in increasing order.
template <typename Fn>
void for_each_index(IndexSet s, Fn&& fn) {
  while (s != 0) {
    fn(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
}

std::vector<std::size_t> to_indices(IndexSet s);

// An n x d zero-one matrix. Equivalently a d-tuple of column subsets of [n]
// or an n-tuple of row subsets of [d]. Stored row-major, one bitmask per row.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols);

  static BoolMatrix from_columns(std::size_t rows, std::span<const IndexSet> columns);
  static BoolMatrix from_rows(std::size_t cols, std::span<const IndexSet> rows);
  static BoolMatrix from_grid(const std::vector<std::vector<int>>& grid);
  static BoolMatrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return contains(rows_[i], j); }
  void set(std::size_t i, std::size_t j, bool value = true);

  IndexSet row(std::size_t i) const { return rows_[i]; }
  IndexSet column(std::size_t j) const;
  std::vector<IndexSet> columns() const;

  std::size_t count() const;
  bool has_empty_column() const;
  bool has_empty_row() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;
  // Canonical total order: shape first, then row masks lexicographically.
  friend std::strong_ordering operator<=>(const BoolMatrix& a, const BoolMatrix& b);

 private:
  std::size_t cols_ = 0;
  std::vector<IndexSet> rows_;
};

// A <= B entrywise. Throws std::invalid_argument on a shape mismatch.
bool leq(const BoolMatrix& a, const BoolMatrix& b);

BoolMatrix transpose(const BoolMatrix& a);

// At most one 1 in every row and every column.
bool is_partial_bijection(const BoolMatrix& a);

// Injective partial map from columns to rows, sigma: [d] -> [n].
class PartialBijection {
 public:
  PartialBijection() = default;

  // Adds (row, col). Throws std::invalid_argument when the row or the column
  // is already used.
  void add(std::size_t row, std::size_t col);
  PartialBijection with(std::size_t row, std::size_t col) const {
    PartialBijection out = *this;
    out.add(row, col);
    return out;
  }

  IndexSet domain() const { return domain_; }
  IndexSet image() const { return image_; }
  std::size_t size() const { return cardinality(domain_); }
  bool empty() const { return domain_ == 0; }
  bool defined_at(std::size_t col) const { return contains(domain_, col); }
  std::size_t row_of(std::size_t col) const { return row_of_[col]; }

  // (row, column) pairs ordered by column.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  BoolMatrix to_matrix(std::size_t rows, std::size_t cols) const;
  static PartialBijection from_matrix(const BoolMatrix& a);

  // Sigma <= A.
  bool contained_in(const BoolMatrix& a) const;

  friend bool operator==(const PartialBijection& a, const PartialBijection& b);
  friend std::strong_ordering operator<=>(const PartialBijection& a, const PartialBijection& b);

 private:
  IndexSet domain_ = 0;
  IndexSet image_ = 0;
  std::array<std::uint8_t, kMaxIndex> row_of_{};
};

namespace detail {

template <typename Fn>
bool visit_bijections(const BoolMatrix& a, std::size_t col, IndexSet used_rows,
                      PartialBijection& current, Fn& fn) {
  if (col == a.cols()) return fn(static_cast<const PartialBijection&>(current));
  if (!visit_bijections(a, col + 1, used_rows, current, fn)) return false;
  bool keep_going = true;
  for_each_index(a.column(col) & ~used_rows, [&](std::size_t row) {
    if (!keep_going) return;
    PartialBijection saved = current;
    current.add(row, col);
    keep_going = visit_bijections(a, col + 1, used_rows | singleton(row), current, fn);
    current = saved;
  });
  return keep_going;
}

}  // namespace detail

// Visits every partial bijection Sigma <= A, including the empty one. The
// order is lexicographic by column: at each column the "undefined" choice
// comes before rows in increasing order. fn returns false to stop early.
// Returns false iff the visit was stopped.
template <typename Fn>
bool for_each_contained_partial_bijection(const BoolMatrix& a, Fn&& fn) {
  PartialBijection current;
  return detail::visit_bijections(a, 0, 0, current, fn);
}

std::vector<PartialBijection> contained_partial_bijections(const BoolMatrix& a);

}  // namespace tropcx

#endif  // TROPCX_BOOL_MATRIX_HPP_
