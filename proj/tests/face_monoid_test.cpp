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

#include <gtest/gtest.h>

#include <stdexcept>

#include "test_support.hpp"
#include "tropcx/text_format.hpp"

namespace tropcx {
namespace {

OrderedSetPartition P(const char* text, std::size_t n) { return parse_partition(text, n); }

IndexSet set_of(std::initializer_list<std::size_t> one_based) {
  IndexSet s = 0;
  for (std::size_t i : one_based) s |= singleton(i - 1);
  return s;
}

// Ordered Bell numbers from a(n) = sum_k C(n, k) a(n - k).
std::size_t ordered_bell(std::size_t n) {
  std::vector<std::size_t> a(n + 1, 0);
  a[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    std::size_t binom = 1;
    for (std::size_t k = 1; k <= m; ++k) {
      binom = binom * (m - k + 1) / k;
      a[m] += binom * a[m - k];
    }
  }
  return a[n];
}

TEST(OrderedSetPartition, Validation) {
  EXPECT_NO_THROW(OrderedSetPartition(3, {set_of({1, 3}), set_of({2})}));
  EXPECT_THROW(OrderedSetPartition(3, {set_of({1, 3})}), std::invalid_argument);
  EXPECT_THROW(OrderedSetPartition(3, {set_of({1, 3}), set_of({2, 3})}), std::invalid_argument);
  EXPECT_THROW(OrderedSetPartition(3, {set_of({1, 2, 3}), 0}), std::invalid_argument);
  EXPECT_THROW(OrderedSetPartition(0, {}), std::invalid_argument);
}

TEST(Product, IdentityIsTwoSided) {
  for (const auto& g : enumerate_partitions(4)) {
    EXPECT_EQ(product(OrderedSetPartition::identity(4), g), g);
    EXPECT_EQ(product(g, OrderedSetPartition::identity(4)), g);
  }
}

TEST(Product, ChamberIsLeftZero) {
  const auto chamber = P("({1}|{2}|{3})", 3);
  EXPECT_TRUE(is_chamber(chamber));
  for (const auto& g : enumerate_partitions(3)) EXPECT_EQ(product(chamber, g), chamber);
}

TEST(Product, WorkedExample) {
  EXPECT_EQ(product(P("({1,3,4}|{2})", 4), P("({2,4}|{1,3})", 4)), P("({4}|{1,3}|{2})", 4));
}

TEST(Product, MismatchedGroundSetThrows) {
  EXPECT_THROW(product(OrderedSetPartition::identity(3), OrderedSetPartition::identity(4)),
               std::invalid_argument);
}

TEST(Product, MonoidAndLeftRegularBandLawsOnP4) {
  const auto all = enumerate_partitions(4);
  for (const auto& f : all) {
    ASSERT_EQ(product(f, f), f);
    for (const auto& g : all) {
      const auto fg = product(f, g);
      ASSERT_EQ(product(fg, f), fg);
      for (const auto& h : all) ASSERT_EQ(product(fg, h), product(f, product(g, h)));
    }
  }
}

TEST(ActSubset, Examples) {
  const auto f = P("({3}|{2}|{1})", 3);
  EXPECT_EQ(act_subset(0, f), 0u);
  EXPECT_EQ(act_subset(set_of({1, 3}), OrderedSetPartition::identity(3)), set_of({1, 3}));
  EXPECT_EQ(act_subset(set_of({1, 3}), f), set_of({1}));
  EXPECT_EQ(act_subset(set_of({2, 3}), f), set_of({2}));
}

TEST(ActSubset, ActionLawShrinkingAndNonMonotonicity) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = enumerate_partitions(n);
    const IndexSet universe = full_set(n);
    for (const auto& f : all) {
      for (IndexSet i = 0; i <= universe; ++i) {
        const IndexSet acted = act_subset(i, f);
        ASSERT_TRUE(is_subset(acted, i));
        for (const auto& g : all) ASSERT_EQ(act_subset(i, product(f, g)), act_subset(acted, g));
        for (IndexSet j = 0; j <= universe; ++j) {
          if (!is_subset(i, j)) continue;
          const IndexSet aj = act_subset(j, f);
          ASSERT_TRUE(is_subset(acted, aj) || (acted & aj) == 0);
        }
      }
    }
  }
}

TEST(ActSubset, ContainmentIsNotPreserved) {
  // {1} is inside {1,2} but {1} o F and {1,2} o F are disjoint.
  const auto f = P("({1}|{2})", 2);
  EXPECT_EQ(act_subset(set_of({1}), f), set_of({1}));
  EXPECT_EQ(act_subset(set_of({1, 2}), f), set_of({2}));
}

TEST(ActMatrix, Examples) {
  const BoolMatrix h = testing::cell_h();
  EXPECT_EQ(act_matrix(h, OrderedSetPartition::identity(3)), h);
  EXPECT_EQ(act_matrix(BoolMatrix(3, 4), P("({2}|{1,3})", 3)), BoolMatrix(3, 4));
  EXPECT_EQ(act_matrix(h, P("({3}|{2}|{1})", 3)), testing::cell_e());
  EXPECT_THROW(act_matrix(h, OrderedSetPartition::identity(4)), std::invalid_argument);
}

TEST(ActMatrix, ShrinksEveryMatrix) {
  std::mt19937_64 rng(5);
  const auto all = enumerate_partitions(3);
  for (int trial = 0; trial < 200; ++trial) {
    const BoolMatrix s = testing::random_bool_matrix(rng, 3, 4);
    for (const auto& f : all) EXPECT_TRUE(leq(act_matrix(s, f), s));
  }
}

TEST(Enumerate, SmallCasesInOrder) {
  const auto one = enumerate_partitions(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], P("({1})", 1));

  const auto two = enumerate_partitions(2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0], P("({1,2})", 2));
  EXPECT_EQ(two[1], P("({1}|{2})", 2));
  EXPECT_EQ(two[2], P("({2}|{1})", 2));
}

TEST(Enumerate, CountsAreOrderedBellNumbers) {
  ASSERT_EQ(ordered_bell(3), 13u);
  ASSERT_EQ(ordered_bell(4), 75u);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = enumerate_partitions(n);
    EXPECT_EQ(all.size(), ordered_bell(n)) << "n = " << n;
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  }
}

TEST(Enumerate, CapIsEnforcedAndConfigurable) {
  EXPECT_THROW(enumerate_partitions(7), std::invalid_argument);
  EXPECT_THROW(enumerate_partitions(0), std::invalid_argument);
  EXPECT_EQ(enumerate_partitions(7, 7).size(), ordered_bell(7));
}

TEST(IsChamber, Examples) {
  EXPECT_TRUE(is_chamber(P("({1}|{2}|{3})", 3)));
  EXPECT_FALSE(is_chamber(OrderedSetPartition::identity(3)));
  EXPECT_FALSE(is_chamber(P("({1,3,4}|{6}|{2,7}|{5})", 7)));
  EXPECT_TRUE(is_chamber(OrderedSetPartition::chamber({2, 0, 1})));
}

}  // namespace
}  // namespace tropcx
