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

#include "tropcx/face_monoid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace tropcx {
namespace {

// Blocks as sorted index lists, the key used for the enumeration order.
std::vector<std::vector<std::size_t>> block_lists(const OrderedSetPartition& f) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(f.size());
  for (IndexSet b : f.blocks()) out.push_back(to_indices(b));
  return out;
}

// Assigns each element a block label in [0, k) so that all k labels occur.
void collect_partitions(std::size_t n, std::size_t element, std::size_t blocks_wanted,
                        std::vector<IndexSet>& current, std::vector<OrderedSetPartition>& out) {
  if (element == n) {
    for (IndexSet b : current) {
      if (b == 0) return;
    }
    out.emplace_back(n, current);
    return;
  }
  for (std::size_t k = 0; k < blocks_wanted; ++k) {
    current[k] |= singleton(element);
    collect_partitions(n, element + 1, blocks_wanted, current, out);
    current[k] &= ~singleton(element);
  }
}

}  // namespace

OrderedSetPartition::OrderedSetPartition(std::size_t n, std::vector<IndexSet> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n == 0 || n > kMaxIndex) throw std::invalid_argument("ordered set partition needs 1 <= n <= 64");
  IndexSet seen = 0;
  for (IndexSet b : blocks_) {
    if (b == 0) throw std::invalid_argument("ordered set partition has an empty block");
    if ((seen & b) != 0) throw std::invalid_argument("ordered set partition blocks overlap");
    seen |= b;
  }
  if (seen != full_set(n)) {
    throw std::invalid_argument("ordered set partition blocks do not cover [" + std::to_string(n) + "]");
  }
}

OrderedSetPartition OrderedSetPartition::identity(std::size_t n) {
  return OrderedSetPartition(n, {full_set(n)});
}

OrderedSetPartition OrderedSetPartition::chamber(const std::vector<std::size_t>& order) {
  std::vector<IndexSet> blocks;
  blocks.reserve(order.size());
  for (std::size_t i : order) {
    if (i >= kMaxIndex) throw std::invalid_argument("chamber index out of range");
    blocks.push_back(singleton(i));
  }
  return OrderedSetPartition(order.size(), std::move(blocks));
}

std::strong_ordering operator<=>(const OrderedSetPartition& a, const OrderedSetPartition& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return block_lists(a) <=> block_lists(b);
}

OrderedSetPartition product(const OrderedSetPartition& f, const OrderedSetPartition& g) {
  if (f.n() != g.n()) throw std::invalid_argument("product: partitions of different ground sets");
  std::vector<IndexSet> blocks;
  blocks.reserve(f.size() * g.size());
  for (IndexSet fb : f.blocks()) {
    for (IndexSet gb : g.blocks()) {
      if (IndexSet both = fb & gb; both != 0) blocks.push_back(both);
    }
  }
  return OrderedSetPartition(f.n(), std::move(blocks));
}

IndexSet act_subset(IndexSet subset, const OrderedSetPartition& f) {
  for (auto it = f.blocks().rbegin(); it != f.blocks().rend(); ++it) {
    if (IndexSet meet = subset & *it; meet != 0) return meet;
  }
  return 0;
}

BoolMatrix act_matrix(const BoolMatrix& s, const OrderedSetPartition& f) {
  if (s.rows() != f.n()) throw std::invalid_argument("act_matrix: row count differs from partition size");
  auto cols = s.columns();
  for (IndexSet& c : cols) c = act_subset(c, f);
  return BoolMatrix::from_columns(s.rows(), cols);
}

bool is_chamber(const OrderedSetPartition& f) { return f.size() == f.n(); }

std::vector<OrderedSetPartition> enumerate_partitions(std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("enumerate_partitions: n must be positive");
  if (n > cap) {
    throw std::invalid_argument("enumerate_partitions: n = " + std::to_string(n) +
                                " exceeds the cap of " + std::to_string(cap));
  }
  std::vector<OrderedSetPartition> out;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<IndexSet> current(k, 0);
    std::vector<OrderedSetPartition> level;
    collect_partitions(n, 0, k, current, level);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace tropcx
