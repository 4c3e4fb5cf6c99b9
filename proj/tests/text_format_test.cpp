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

#include "tropcx/text_format.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "test_support.hpp"

namespace tropcx {
namespace {

TEST(TextFormat, Subsets) {
  EXPECT_EQ(format_subset(0), "{}");
  EXPECT_EQ(format_subset(0b101), "{1,3}");
}

TEST(TextFormat, TypeExamples) {
  const BoolMatrix h = parse_type("({2},{1,2},{1},{1,3})", 3);
  EXPECT_TRUE(h.get(1, 0));
  EXPECT_TRUE(h.get(0, 1) && h.get(1, 1));
  EXPECT_TRUE(h.get(2, 3));
  EXPECT_EQ(h.count(), 6u);
  EXPECT_EQ(format_type(h), "({2},{1,2},{1},{1,3})");
  EXPECT_EQ(parse_type(" ( {2} , {1, 2},{1},{3,1} ) ", 3), h);
}

TEST(TextFormat, TypeRoundTrip) {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const BoolMatrix t = testing::random_bool_matrix(rng, n, 1 + rng() % 5);
    ASSERT_EQ(parse_type(format_type(t), n), t);
  }
}

TEST(TextFormat, TypeErrors) {
  for (const char* bad : {"", "()", "({1}", "{1},{2}", "({1},{4})", "({0})", "({1,x})", "({1}{2})", "({1},{2}) x"}) {
    EXPECT_THROW(parse_type(bad, 3), std::invalid_argument) << bad;
  }
}

TEST(TextFormat, PartitionRoundTrip) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate_partitions(n)) ASSERT_EQ(parse_partition(format_partition(p), n), p);
  }
  EXPECT_EQ(format_partition(OrderedSetPartition::identity(3)), "({1,2,3})");
}

TEST(TextFormat, PartitionErrors) {
  for (const char* bad : {"({1,2})", "({1}|{1,2,3})", "({1}|{}|{2,3})", "({1}|{2}|{4})", "{1,2,3}", "({1,2,3}|)"}) {
    EXPECT_THROW(parse_partition(bad, 3), std::invalid_argument) << bad;
  }
}

TEST(TextFormat, Points) {
  const Point x = parse_point("0,-1/2, 3");
  ASSERT_EQ(x.size(), 3u);
  EXPECT_EQ(x[1], Rational(-1, 2));
  EXPECT_EQ(format_point(x), "0,-1/2,3");
  EXPECT_EQ(parse_point("1.25")[0], Rational(5, 4));
  for (const char* bad : {"", "0,x,0", "1,,2", "1/0", "0,"}) {
    EXPECT_THROW(parse_point(bad), std::invalid_argument) << bad;
  }
}

}  // namespace
}  // namespace tropcx
