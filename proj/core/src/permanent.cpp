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

#include "tropcx/permanent.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace tropcx {
namespace {

void check_square(const RationalMatrix& x, std::size_t cap) {
  if (x.rows() == 0 || !x.is_square()) throw std::invalid_argument("permanent needs a non-empty square matrix");
  if (x.rows() > cap) {
    throw std::invalid_argument("permanent of a " + std::to_string(x.rows()) + "x" +
                                std::to_string(x.rows()) + " matrix exceeds the cap of " +
                                std::to_string(cap));
  }
}

// Branch-and-bound over column-by-column row choices. The bound for the
// unassigned columns is the sum of their column maxima.
class AssignmentSearch {
 public:
  explicit AssignmentSearch(const RationalMatrix& x) : x_(x), k_(x.rows()), tail_(k_ + 1) {
    for (std::size_t j = k_; j-- > 0;) {
      Rational best = x_(0, j);
      for (std::size_t i = 1; i < k_; ++i) {
        if (best < x_(i, j)) best = x_(i, j);
      }
      tail_[j] = tail_[j + 1] + best;
    }
  }

  Rational optimum() {
    Rational start;
    for (std::size_t j = 0; j < k_; ++j) start += x_(j, j);
    best_ = start;
    std::vector<std::size_t> rows(k_);
    maximize(0, 0, Rational(0), rows);
    return best_;
  }

  std::vector<std::vector<std::size_t>> attaining(const Rational& optimum) {
    best_ = optimum;
    found_.clear();
    std::vector<std::size_t> rows(k_);
    collect(0, 0, Rational(0), rows);
    return std::move(found_);
  }

 private:
  void maximize(std::size_t j, IndexSet used, const Rational& partial, std::vector<std::size_t>& rows) {
    if (j == k_) {
      if (best_ < partial) best_ = partial;
      return;
    }
    if (partial + tail_[j] <= best_) return;
    for (std::size_t i = 0; i < k_; ++i) {
      if (contains(used, i)) continue;
      rows[j] = i;
      maximize(j + 1, used | singleton(i), partial + x_(i, j), rows);
    }
  }

  void collect(std::size_t j, IndexSet used, const Rational& partial, std::vector<std::size_t>& rows) {
    if (j == k_) {
      if (partial == best_) found_.push_back(rows);
      return;
    }
    if (partial + tail_[j] < best_) return;
    for (std::size_t i = 0; i < k_; ++i) {
      if (contains(used, i)) continue;
      rows[j] = i;
      collect(j + 1, used | singleton(i), partial + x_(i, j), rows);
    }
  }

  const RationalMatrix& x_;
  std::size_t k_;
  std::vector<Rational> tail_;
  Rational best_;
  std::vector<std::vector<std::size_t>> found_;
};

Rational bijection_weight(const Arrangement& arr, const PartialBijection& sigma) {
  Rational total;
  for_each_index(sigma.domain(), [&](std::size_t j) { total += arr(sigma.row_of(j), j); });
  return total;
}

void check_bijection(const Arrangement& arr, const PartialBijection& sigma) {
  if (!is_subset(sigma.domain(), full_set(arr.cols())) || !is_subset(sigma.image(), full_set(arr.rows()))) {
    throw std::out_of_range("partial bijection does not fit the arrangement");
  }
}

}  // namespace

Rational tropical_permanent(const RationalMatrix& x, std::size_t cap) {
  check_square(x, cap);
  return AssignmentSearch(x).optimum();
}

std::vector<std::vector<std::size_t>> permanent_attaining_permutations(const RationalMatrix& x,
                                                                       std::size_t cap) {
  check_square(x, cap);
  AssignmentSearch search(x);
  const Rational best = search.optimum();
  return search.attaining(best);
}

bool is_permanent_attaining(const Arrangement& arr, const PartialBijection& sigma) {
  check_bijection(arr, sigma);
  if (sigma.empty()) return true;
  const RationalMatrix sub = arr.submatrix(sigma.image(), sigma.domain());
  return bijection_weight(arr, sigma) == tropical_permanent(sub);
}

std::vector<PartialBijection> optimal_bijections(const Arrangement& arr, IndexSet rows, IndexSet cols) {
  if (rows == 0 || cardinality(rows) != cardinality(cols)) {
    throw std::invalid_argument("optimal_bijections needs |I| = |J| >= 1");
  }
  const auto row_index = to_indices(rows);
  const auto col_index = to_indices(cols);
  std::vector<PartialBijection> out;
  for (const auto& tau : permanent_attaining_permutations(arr.submatrix(rows, cols))) {
    PartialBijection sigma;
    for (std::size_t b = 0; b < col_index.size(); ++b) sigma.add(row_index[tau[b]], col_index[b]);
    out.push_back(sigma);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct PermanentStructure::Entry {
  Rational optimum;
  std::vector<PartialBijection> optimal;
};

struct PermanentStructure::Cache {
  std::mutex mutex;
  std::map<std::pair<IndexSet, IndexSet>, Entry> entries;
};

PermanentStructure::PermanentStructure(Arrangement arr, std::size_t k_max)
    : arr_(std::move(arr)), k_max_(k_max), cache_(std::make_unique<Cache>()) {
  if (k_max_ == 0 || k_max_ > std::min(arr_.rows(), arr_.cols())) {
    throw std::invalid_argument("permanent structure needs 1 <= k_max <= min(n, d)");
  }
  if (k_max_ > kDefaultPermanentCap) {
    throw std::invalid_argument("permanent structure k_max exceeds the assignment cap of " +
                                std::to_string(kDefaultPermanentCap));
  }
}

PermanentStructure::~PermanentStructure() = default;
PermanentStructure::PermanentStructure(PermanentStructure&&) noexcept = default;
PermanentStructure& PermanentStructure::operator=(PermanentStructure&&) noexcept = default;

const PermanentStructure::Entry& PermanentStructure::entry(IndexSet rows, IndexSet cols) const {
  const std::size_t k = cardinality(rows);
  if (k == 0 || k != cardinality(cols)) throw std::invalid_argument("permanent structure needs |I| = |J| >= 1");
  if (k > k_max_) throw std::invalid_argument("query exceeds the permanent structure's k_max");
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->entries.find({rows, cols});
  if (it == cache_->entries.end()) {
    Entry e;
    e.optimal = optimal_bijections(arr_, rows, cols);
    e.optimum = tropical_permanent(arr_.submatrix(rows, cols));
    it = cache_->entries.emplace(std::make_pair(rows, cols), std::move(e)).first;
  }
  // std::map nodes are stable and entries are never modified after insertion.
  return it->second;
}

bool PermanentStructure::is_attaining(const PartialBijection& sigma) const {
  check_bijection(arr_, sigma);
  if (sigma.empty()) return true;
  return bijection_weight(arr_, sigma) == entry(sigma.image(), sigma.domain()).optimum;
}

const Rational& PermanentStructure::optimum(IndexSet rows, IndexSet cols) const {
  return entry(rows, cols).optimum;
}

const std::vector<PartialBijection>& PermanentStructure::optimal(IndexSet rows, IndexSet cols) const {
  return entry(rows, cols).optimal;
}

std::vector<PartialBijection> PermanentStructure::bijections() const {
  std::vector<PartialBijection> out{PartialBijection{}};
  const IndexSet all_rows = full_set(arr_.rows());
  const IndexSet all_cols = full_set(arr_.cols());
  for (std::size_t k = 1; k <= k_max_; ++k) {
    std::vector<PartialBijection> level;
    for (IndexSet rows = all_rows;; rows = (rows - 1) & all_rows) {
      if (cardinality(rows) == k) {
        for (IndexSet cols = all_cols;; cols = (cols - 1) & all_cols) {
          if (cardinality(cols) == k) {
            const auto& opt = optimal(rows, cols);
            level.insert(level.end(), opt.begin(), opt.end());
          }
          if (cols == 0) break;
        }
      }
      if (rows == 0) break;
    }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::optional<Point> column_space_witness(const Arrangement& arr, const PartialBijection& sigma) {
  if (sigma.empty()) return arr.apex(0);
  const std::vector<std::size_t> rows = to_indices(sigma.image());
  const std::vector<std::size_t> cols = to_indices(sigma.domain());
  if (rows.back() >= arr.rows() || cols.back() >= arr.cols()) {
    throw std::invalid_argument("column_space_witness: bijection exceeds the arrangement");
  }
  const Arrangement x(arr.submatrix(sigma.image(), sigma.domain()));
  const std::size_t k = cols.size();
  BoolMatrix local(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t r = static_cast<std::size_t>(
        std::lower_bound(rows.begin(), rows.end(), sigma.row_of(cols[c])) - rows.begin());
    local.set(r, c);
  }
  const std::optional<Point> w = witness(x, local);
  if (!w) return std::nullopt;
  const Point yhat = column_space_projection(x, *w);

  Point y(arr.rows());
  for (std::size_t c = 0; c < k; ++c) {
    const Rational alpha = residuation(x.apex(c), yhat);
    for (std::size_t t = 0; t < arr.rows(); ++t) {
      const Rational v = alpha + arr(t, cols[c]);
      if (c == 0 || y[t] < v) y[t] = v;
    }
  }
  return y;
}

PermanentStructure permanent_structure(const Arrangement& arr, std::size_t k_max) {
  return PermanentStructure(arr, k_max);
}

PermanentStructure permanent_structure(const Arrangement& arr) {
  return PermanentStructure(arr, std::min({arr.rows(), arr.cols(), kDefaultPermanentCap}));
}

}  // namespace tropcx
