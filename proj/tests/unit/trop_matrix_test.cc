// Copyright 2026 The Authors.
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

#include "tropsp/trop_matrix.h"

#include <gtest/gtest.h>

#include "generators.h"
#include "oracles.h"

namespace tropsp {
namespace {

const TropNum kInf = TropNum::inf();

TEST(TdetTest, Diagonal) {
  EXPECT_EQ(tdet(make_trop_matrix({{0, kInf}, {kInf, 0}})), TropNum(0));
}

TEST(TdetTest, TwoByTwoColumnsOfE) {
  EXPECT_EQ(tdet(make_trop_matrix({{1, 1}, {0, 0}})), TropNum(1));
}

TEST(TdetTest, RepeatedColumnsDoNotCancel) {
  EXPECT_EQ(tdet(make_trop_matrix({{0, 0}, {0, 0}})), TropNum(0));
}

TEST(TdetTest, NoFiniteAssignment) {
  EXPECT_TRUE(tdet(make_trop_matrix({{0, 0}, {kInf, kInf}})).is_inf());
  EXPECT_TRUE(
      tdet(make_trop_matrix({{0, kInf, kInf}, {0, kInf, kInf}, {0, 0, 0}}))
          .is_inf());
}

TEST(TdetTest, NonSquareThrows) {
  EXPECT_THROW(tdet(make_trop_matrix({{0, 1}})), std::invalid_argument);
}

TEST(TdetTest, MatchesPermutationBruteForce) {
  test::Rng rng(2026);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + trial % 6;
    const TropMatrix m = test::random_trop_matrix(rng, k, k, 0.2, -9, 9);
    EXPECT_EQ(tdet(m), test::brute_tdet(m)) << "k=" << k;
  }
}

TEST(TmatmulTest, ProductForD) {
  const TropMatrix a = make_trop_matrix({{0, 0}, {0, 0}});
  const TropMatrix b = make_trop_matrix({{1, 1}, {0, 0}});
  EXPECT_EQ(tmatmul(a, b.transpose()), make_trop_matrix({{1, 0}, {1, 0}}));
}

TEST(TmatmulTest, ProductForE) {
  const TropMatrix a = make_trop_matrix({{0, 1}, {0, 0}});
  const TropMatrix b = make_trop_matrix({{0, 1}, {0, 0}});
  EXPECT_EQ(tmatmul(a, b.transpose()), make_trop_matrix({{0, 0}, {0, 0}}));
}

TEST(TmatmulTest, InfFactorGivesInf) {
  test::Rng rng(3);
  const TropMatrix a = test::random_trop_matrix(rng, 3, 4);
  const TropMatrix b = TropMatrix::Constant(4, 2, kInf);
  EXPECT_TRUE(all_inf(tmatmul(a, b)));
}

TEST(TmatmulTest, DimensionMismatchThrows) {
  EXPECT_THROW(tmatmul(TropMatrix(2, 3), TropMatrix(2, 3)),
               std::invalid_argument);
}

TEST(TropMatrixTest, FullRankAndColumns) {
  const TropMatrix m = make_trop_matrix({{0, kInf, 3}, {kInf, kInf, 1}});
  EXPECT_TRUE(tropically_full_rank(m));
  EXPECT_EQ(select_columns(m, Subset::of({0, 2})),
            make_trop_matrix({{0, 3}, {kInf, 1}}));
  EXPECT_FALSE(tropically_full_rank(make_trop_matrix({{kInf, 0}, {kInf, 1}})));
}

}  // namespace
}  // namespace tropsp
