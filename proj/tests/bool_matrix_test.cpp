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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "test_support.hpp"

namespace tropcx {
namespace {

using testing::brute_force_bijections;
using testing::matrix_from_bits;

TEST(BoolMatrix, RowAndColumnViewsAgree) {
  const BoolMatrix h = testing::cell_h();
  EXPECT_EQ(h.rows(), 3u);
  EXPECT_EQ(h.cols(), 4u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(h.get(i, j), contains(h.column(j), i));
      EXPECT_EQ(h.get(i, j), contains(h.row(i), j));
    }
  }
  EXPECT_EQ(h.row(0), singleton(1) | singleton(2) | singleton(3));
  EXPECT_EQ(h.column(1), singleton(0) | singleton(1));
}

TEST(BoolMatrix, RejectsBadShapes) {
  EXPECT_THROW(BoolMatrix(0, 3), std::invalid_argument);
  EXPECT_THROW(BoolMatrix(65, 1), std::invalid_argument);
  const IndexSet cols[] = {singleton(3)};
  EXPECT_THROW(BoolMatrix::from_columns(3, cols), std::invalid_argument);
  EXPECT_THROW(BoolMatrix::from_grid({{0, 2}}), std::invalid_argument);
}

TEST(Leq, Examples) {
  const BoolMatrix zero(2, 2);
  const BoolMatrix some = BoolMatrix::from_grid({{1, 0}, {1, 1}});
  EXPECT_TRUE(leq(zero, some));
  EXPECT_TRUE(leq(some, some));
  EXPECT_FALSE(leq(some, zero));
  EXPECT_TRUE(leq(testing::cell_e(), testing::cell_g()));
  EXPECT_FALSE(leq(testing::cell_g(), testing::cell_e()));
}

TEST(Leq, DimensionMismatchThrows) {
  EXPECT_THROW(leq(BoolMatrix(2, 2), BoolMatrix(2, 3)), std::invalid_argument);
}

TEST(Leq, IsAPartialOrderOnSmallShapes) {
  for (std::size_t rows = 1; rows <= 2; ++rows) {
    for (std::size_t cols = 1; cols <= 3; ++cols) {
      const unsigned long count = 1UL << (rows * cols);
      for (unsigned long a = 0; a < count; ++a) {
        const BoolMatrix ma = matrix_from_bits(rows, cols, a);
        ASSERT_TRUE(leq(ma, ma));
        for (unsigned long b = 0; b < count; ++b) {
          const BoolMatrix mb = matrix_from_bits(rows, cols, b);
          const bool ab = leq(ma, mb);
          if (ab && leq(mb, ma)) ASSERT_EQ(ma, mb);
          for (unsigned long c = 0; ab && c < count; ++c) {
            const BoolMatrix mc = matrix_from_bits(rows, cols, c);
            if (leq(mb, mc)) ASSERT_TRUE(leq(ma, mc));
          }
        }
      }
    }
  }
}

TEST(Leq, ThreeByThreeOrderLaws) {
  // Reflexivity and antisymmetry over every pair; transitivity on samples.
  for (unsigned long a = 0; a < 512; ++a) {
    const BoolMatrix ma = matrix_from_bits(3, 3, a);
    ASSERT_TRUE(leq(ma, ma));
    for (unsigned long b = 0; b < 512; ++b) {
      const BoolMatrix mb = matrix_from_bits(3, 3, b);
      if (leq(ma, mb) && leq(mb, ma)) ASSERT_EQ(a, b);
    }
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const BoolMatrix a = testing::random_bool_matrix(rng, 3, 3);
    const BoolMatrix b = testing::random_bool_matrix(rng, 3, 3);
    const BoolMatrix c = testing::random_bool_matrix(rng, 3, 3);
    if (leq(a, b) && leq(b, c)) EXPECT_TRUE(leq(a, c));
  }
}

TEST(Transpose, Examples) {
  const BoolMatrix id = BoolMatrix::from_grid({{1, 0}, {0, 1}});
  EXPECT_EQ(transpose(id), id);
  EXPECT_EQ(transpose(BoolMatrix::from_grid({{1, 0, 1}})), BoolMatrix::from_grid({{1}, {0}, {1}}));
  const BoolMatrix e = testing::cell_e();
  const BoolMatrix et = transpose(e);
  ASSERT_EQ(et.rows(), 4u);
  ASSERT_EQ(et.cols(), 3u);
  // Row j of the transpose is column j of E.
  EXPECT_EQ(et, BoolMatrix::from_grid({{0, 1, 0}, {1, 0, 0}, {1, 0, 0}, {1, 0, 0}}));
}

TEST(Transpose, InvolutionAndOrderIsomorphism) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const BoolMatrix a = testing::random_bool_matrix(rng, 3, 4);
    const BoolMatrix b = testing::random_bool_matrix(rng, 3, 4);
    EXPECT_EQ(transpose(transpose(a)), a);
    EXPECT_EQ(leq(a, b), leq(transpose(a), transpose(b)));
  }
}

TEST(IsPartialBijection, Examples) {
  EXPECT_TRUE(is_partial_bijection(BoolMatrix(2, 2)));
  EXPECT_FALSE(is_partial_bijection(BoolMatrix::ones(2, 2)));
  EXPECT_FALSE(is_partial_bijection(testing::cell_h()));
  EXPECT_TRUE(is_partial_bijection(BoolMatrix::from_grid({{0, 1, 0}, {0, 0, 0}, {1, 0, 0}})));
  EXPECT_FALSE(is_partial_bijection(BoolMatrix::from_grid({{1, 0}, {1, 0}})));
}

TEST(PartialBijection, RejectsNonInjectivePairs) {
  PartialBijection s;
  s.add(0, 1);
  EXPECT_THROW(s.add(0, 2), std::invalid_argument);
  EXPECT_THROW(s.add(3, 1), std::invalid_argument);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.domain(), singleton(1));
  EXPECT_EQ(s.image(), singleton(0));
}

TEST(PartialBijection, MatrixRoundTrip) {
  const BoolMatrix m = BoolMatrix::from_grid({{0, 1, 0}, {0, 0, 0}, {1, 0, 0}});
  const PartialBijection s = PartialBijection::from_matrix(m);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.row_of(0), 2u);
  EXPECT_EQ(s.row_of(1), 0u);
  EXPECT_EQ(s.to_matrix(3, 3), m);
  EXPECT_THROW(PartialBijection::from_matrix(BoolMatrix::ones(2, 2)), std::invalid_argument);
}

TEST(ContainedPartialBijections, ZeroMatrixYieldsOnlyTheEmptyOne) {
  const auto all = contained_partial_bijections(BoolMatrix(3, 2));
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].empty());
}

TEST(ContainedPartialBijections, AllOnesTwoByTwo) {
  const BoolMatrix ones = BoolMatrix::ones(2, 2);
  ASSERT_EQ(brute_force_bijections(ones).size(), 7u);
  const auto all = contained_partial_bijections(ones);
  ASSERT_EQ(all.size(), 7u);
  std::size_t by_size[3] = {0, 0, 0};
  for (const auto& s : all) ++by_size[s.size()];
  EXPECT_EQ(by_size[0], 1u);
  EXPECT_EQ(by_size[1], 4u);
  EXPECT_EQ(by_size[2], 2u);
}

TEST(ContainedPartialBijections, CellEInStreamOrder) {
  // Zero-based (row, col) pairs; undefined-before-rows at each column.
  const std::vector<std::vector<std::pair<std::size_t, std::size_t>>> expected = {
      {},
      {{0, 3}},
      {{0, 2}},
      {{0, 1}},
      {{1, 0}},
      {{1, 0}, {0, 3}},
      {{1, 0}, {0, 2}},
      {{1, 0}, {0, 1}},
  };
  const auto all = contained_partial_bijections(testing::cell_e());
  ASSERT_EQ(all.size(), expected.size());
  for (std::size_t k = 0; k < all.size(); ++k) EXPECT_EQ(all[k].pairs(), expected[k]) << "item " << k;
  EXPECT_EQ(brute_force_bijections(testing::cell_e()).size(), expected.size());
}

TEST(ContainedPartialBijections, MatchesBruteForceUpToFourByFour) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 4;
    const std::size_t cols = 1 + rng() % 4;
    const BoolMatrix a = testing::random_bool_matrix(rng, rows, cols);
    std::set<BoolMatrix> streamed;
    for (const auto& s : contained_partial_bijections(a)) {
      const BoolMatrix m = s.to_matrix(rows, cols);
      ASSERT_TRUE(is_partial_bijection(m));
      ASSERT_TRUE(leq(m, a));
      ASSERT_TRUE(streamed.insert(m).second) << "duplicate in stream";
    }
    const auto oracle = brute_force_bijections(a);
    ASSERT_EQ(std::set<BoolMatrix>(oracle.begin(), oracle.end()), streamed);
  }
  const BoolMatrix ones = BoolMatrix::ones(4, 4);
  EXPECT_EQ(contained_partial_bijections(ones).size(), brute_force_bijections(ones).size());
}

TEST(ContainedPartialBijections, VisitorStopsEarly) {
  int seen = 0;
  const bool finished = for_each_contained_partial_bijection(BoolMatrix::ones(3, 3), [&](const PartialBijection&) {
    return ++seen < 5;
  });
  EXPECT_FALSE(finished);
  EXPECT_EQ(seen, 5);
}

}  // namespace
}  // namespace tropcx
