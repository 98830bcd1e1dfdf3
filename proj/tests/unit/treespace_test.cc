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

#include "tropsp/treespace.h"

#include <gtest/gtest.h>

#include <set>

#include "oracles.h"

namespace tropsp {
namespace {

TEST(TreeTest, Tripod) {
  const PhyloTree t = PhyloTree::tripod();
  EXPECT_EQ(t.leaves(), 3);
  EXPECT_EQ(t.vertices(), 4);
  EXPECT_TRUE(t.splits().empty());
  EXPECT_EQ(t.distances()[0][2], 2);
}

TEST(TreeTest, RejectsMalformed) {
  using E = PhyloTree::Edge;
  // Leaf 0 of degree 2.
  EXPECT_THROW(PhyloTree(3, {{0, 3, 1}, {1, 3, 1}, {0, 2, 1}}),
               std::invalid_argument);
  EXPECT_THROW(PhyloTree(3, std::vector<E>{{0, 3, -1}, {1, 3, 1}, {2, 3, 1}}),
               std::invalid_argument);
  EXPECT_THROW(PhyloTree(2, {}), std::invalid_argument);
}

TEST(TreeTest, TopologyCounts) {
  EXPECT_EQ(topology_count(4), 3);
  EXPECT_EQ(topology_count(6), 105);
  EXPECT_EQ(topology_count(8), 10395);
  EXPECT_EQ(count_splits(4), 3);
  EXPECT_EQ(count_splits(6), 25);
  EXPECT_EQ(count_splits(8), 119);
  for (int m = 3; m <= 7; ++m) {
    EXPECT_EQ(BigInt(static_cast<long>(enumerate_topologies(m).size())),
              topology_count(m));
  }
}

TEST(TreeTest, EnumeratedTopologiesAreDistinctAndCoverAllSplits) {
  for (int m = 4; m <= 7; ++m) {
    std::set<std::vector<Subset>> signatures;
    std::set<Subset> splits;
    for_each_topology(m, [&](const PhyloTree& t) {
      const std::vector<Subset> s = t.splits();
      EXPECT_EQ(static_cast<int>(s.size()), m - 3);
      signatures.insert(s);
      splits.insert(s.begin(), s.end());
    });
    EXPECT_EQ(BigInt(static_cast<long>(signatures.size())), topology_count(m));
    EXPECT_EQ(BigInt(static_cast<long>(splits.size())), count_splits(m));
  }
}

TEST(TreeTest, PluckerVectorOfTreeMetric) {
  std::mt19937_64 rng(173);
  for (int trial = 0; trial < 60; ++trial) {
    const PhyloTree t = random_tree(4 + trial % 5, rng);
    const auto d = t.distances();
    EXPECT_TRUE(test::four_point_condition(d));
    const ValuatedMatroid mu = tree_to_plucker(t);
    EXPECT_TRUE(check_plucker(mu).verdict);
    EXPECT_EQ(mu[Subset::of({0, 1})], TropNum(Rational(-d[0][1])));
  }
}

TEST(TreeTest, NonTreeMetricFailsPlucker) {
  // d12 + d34 is strictly the largest of the three sums, so the minimum of
  // the negated values is attained once.
  const std::vector<std::vector<int>> d = {
      {0, 5, 2, 2}, {5, 0, 2, 2}, {2, 2, 0, 5}, {2, 2, 5, 0}};
  const ValuatedMatroid mu = ValuatedMatroid::from_function(
      4, 2, [&](Subset j) {
        const auto e = j.elements();
        return TropNum(-d[e[0]][e[1]]);
      });
  EXPECT_FALSE(check_plucker(mu).verdict);
}

TEST(TreeTest, CaterpillarSplits) {
  const PhyloTree t = parse_newick("((1,2),3,(4,5));");
  EXPECT_EQ(t.splits(),
            (std::vector<Subset>{Subset::of({3, 4}), Subset::of({2, 3, 4})}));
}

TEST(TreeSpaceTest, RaysAndFacets) {
  EXPECT_EQ(tspgr2_counts(2).rays, 5);
  EXPECT_EQ(tspgr2_counts(2).facets, 3);
  EXPECT_EQ(tspgr2_counts(3).rays, 28);
  EXPECT_EQ(tspgr2_counts(3).facets, 315);
  EXPECT_EQ(tspgr2_counts(4).rays, 123);
  EXPECT_EQ(tspgr2_counts(4).facets, 62370);
}

TEST(TreeSpaceTest, RaysMatchEnumeratedSplits) {
  for (int n = 2; n <= 4; ++n) {
    const RayFacetCounts c = tspgr2_counts(n);
    EXPECT_EQ(c.rays, count_splits(2 * n) + n);
    EXPECT_EQ(c.facets, BigInt(n * (n - 1) / 2) * topology_count(2 * n));
  }
}

TEST(TreeSpaceTest, BettiNumbers) {
  EXPECT_EQ(betti_numbers(2), (std::map<int, BigInt>{{0, 3}}));
  EXPECT_EQ(betti_numbers(3), (std::map<int, BigInt>{{0, 3}, {2, 72}}));
  EXPECT_EQ(betti_numbers(4),
            (std::map<int, BigInt>{{0, 1}, {1, 3}, {4, 720}, {5, 2160}}));
  EXPECT_THROW(betti_numbers(1), std::invalid_argument);
}

TEST(NewickTest, Write) {
  EXPECT_EQ(to_newick(PhyloTree::tripod()), "(1:1,2:1,3:1);");
}

TEST(NewickTest, RoundTrip) {
  std::mt19937_64 rng(179);
  for (int trial = 0; trial < 40; ++trial) {
    const PhyloTree t = random_tree(3 + trial % 6, rng);
    const std::string s = to_newick(t);
    const PhyloTree u = parse_newick(s);
    EXPECT_EQ(u.splits(), t.splits());
    EXPECT_EQ(u.distances(), t.distances());
    EXPECT_EQ(to_newick(u), s);
  }
}

TEST(NewickTest, RootedInputIsUnrooted) {
  const PhyloTree t = parse_newick("((1:1,2:2):1,(3:1,4:1):2);");
  EXPECT_EQ(t.leaves(), 4);
  EXPECT_EQ(t.distances()[0][2], 5);
  EXPECT_EQ(t.distances()[0][1], 3);
}

TEST(NewickTest, Errors) {
  EXPECT_THROW(parse_newick("(1,2,3)"), std::invalid_argument);
  EXPECT_THROW(parse_newick("(1,2,2);"), std::invalid_argument);
  EXPECT_THROW(parse_newick("(1,2,3:-1);"), std::invalid_argument);
  EXPECT_THROW(parse_newick("(1,2,(3,4)x);"), std::invalid_argument);
  EXPECT_THROW(parse_newick("(1,2,3,4);"), std::invalid_argument);
  try {
    parse_newick("(1,2,a);");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("offset 5"), std::string::npos);
  }
}

}  // namespace
}  // namespace tropsp
