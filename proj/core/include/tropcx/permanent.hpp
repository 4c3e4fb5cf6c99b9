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

#ifndef TROPCX_PERMANENT_HPP_
#define TROPCX_PERMANENT_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "tropcx/bool_matrix.hpp"
#include "tropcx/rational.hpp"
#include "tropcx/tropical.hpp"

namespace tropcx {

// Largest k for which optimal assignments are computed by permutation
// search (8! = 40320 leaves before pruning).
inline constexpr std::size_t kDefaultPermanentCap = 8;

// max over permutations tau of sum_j X(tau(j), j). Throws std::invalid_argument
// for an empty or non-square X, or one larger than cap.
Rational tropical_permanent(const RationalMatrix& x, std::size_t cap = kDefaultPermanentCap);

// Every permutation attaining the permanent, as tau[j] = row of column j,
// in lexicographic order.
std::vector<std::vector<std::size_t>> permanent_attaining_permutations(
    const RationalMatrix& x, std::size_t cap = kDefaultPermanentCap);

// sum_{j in J} M(sigma(j), j) is maximal among bijections J -> I.
bool is_permanent_attaining(const Arrangement& arr, const PartialBijection& sigma);

// Every bijection J -> I attaining the permanent of the I x J submatrix.
// Throws std::invalid_argument when |I| != |J| or either is empty.
std::vector<PartialBijection> optimal_bijections(const Arrangement& arr, IndexSet rows, IndexSet cols);

// A point of the max-plus column space of M built from sigma alone: a witness
// of sigma on the I x J submatrix X, pulled into Col(X) and then lifted to
//   y = max_{j in J} (<X_j | yhat> + M_j).
// nullopt when sigma is not satisfiable on X. The empty bijection yields the
// first apex.
std::optional<Point> column_space_witness(const Arrangement& arr, const PartialBijection& sigma);

// The permanent-attaining partial bijections of an arrangement of size at
// most k_max. Per-(I, J) optima are computed on first use and cached; the
// cache is guarded so concurrent queries observe a single computation.
class PermanentStructure {
 public:
  PermanentStructure(Arrangement arr, std::size_t k_max);
  ~PermanentStructure();
  PermanentStructure(PermanentStructure&&) noexcept;
  PermanentStructure& operator=(PermanentStructure&&) noexcept;

  const Arrangement& arrangement() const { return arr_; }
  std::size_t k_max() const { return k_max_; }

  // Requires |sigma| <= k_max. The empty bijection is attaining.
  bool is_attaining(const PartialBijection& sigma) const;

  // Permanent of the I x J submatrix (|I| = |J| <= k_max).
  const Rational& optimum(IndexSet rows, IndexSet cols) const;
  // Optimal bijections J -> I in canonical order.
  const std::vector<PartialBijection>& optimal(IndexSet rows, IndexSet cols) const;

  // Every attaining partial bijection of size <= k_max, the empty one first,
  // then by size, then canonical order.
  std::vector<PartialBijection> bijections() const;

 private:
  struct Entry;
  struct Cache;

  const Entry& entry(IndexSet rows, IndexSet cols) const;

  Arrangement arr_;
  std::size_t k_max_;
  std::unique_ptr<Cache> cache_;
};

// Throws std::invalid_argument unless 1 <= k_max <= min(n, d).
PermanentStructure permanent_structure(const Arrangement& arr, std::size_t k_max);

// Full structure, k_max = min(n, d).
PermanentStructure permanent_structure(const Arrangement& arr);

}  // namespace tropcx

#endif  // TROPCX_PERMANENT_HPP_
