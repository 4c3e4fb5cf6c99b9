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

#ifndef TROPCX_FACE_MONOID_HPP_
#define TROPCX_FACE_MONOID_HPP_

#include <compare>
#include <cstddef>
#include <vector>

#include "tropcx/bool_matrix.hpp"

namespace tropcx {

// Default bound on n for enumerate_partitions; P_6 has 4683 elements.
inline constexpr std::size_t kDefaultPartitionCap = 6;

// A face of the braid arrangement: an ordered tuple of disjoint non-empty
// blocks whose union is {0, ..., n-1}.
class OrderedSetPartition {
 public:
  // Throws std::invalid_argument unless the blocks form an ordered set
  // partition of [n].
  OrderedSetPartition(std::size_t n, std::vector<IndexSet> blocks);

  // The single-block partition ([n]), the identity of the monoid.
  static OrderedSetPartition identity(std::size_t n);
  // ({order[0]}, {order[1]}, ...), the chamber for a permutation of [n].
  static OrderedSetPartition chamber(const std::vector<std::size_t>& order);

  std::size_t n() const { return n_; }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<IndexSet>& blocks() const { return blocks_; }
  IndexSet block(std::size_t k) const { return blocks_[k]; }

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
  friend std::strong_ordering operator<=>(const OrderedSetPartition& a,
                                          const OrderedSetPartition& b);

 private:
  std::size_t n_;
  std::vector<IndexSet> blocks_;
};

// F * G = (F_1 & G_1, ..., F_1 & G_r, F_2 & G_1, ..., F_l & G_r) with empty
// intersections deleted.
OrderedSetPartition product(const OrderedSetPartition& f, const OrderedSetPartition& g);

// I o F: the right-most non-empty intersection of I with a block of F, or the
// empty set when I is empty.
IndexSet act_subset(IndexSet subset, const OrderedSetPartition& f);

// Componentwise action on columns. Throws on a row-count mismatch.
BoolMatrix act_matrix(const BoolMatrix& s, const OrderedSetPartition& f);

bool is_chamber(const OrderedSetPartition& f);

// All ordered set partitions of [n], ordered by block count and then
// lexicographically by the sorted block contents. Throws std::invalid_argument
// when n is zero or exceeds cap.
std::vector<OrderedSetPartition> enumerate_partitions(std::size_t n,
                                                      std::size_t cap = kDefaultPartitionCap);

}  // namespace tropcx

#endif  // TROPCX_FACE_MONOID_HPP_
