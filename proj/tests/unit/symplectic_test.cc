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

#include "tropsp/symplectic.h"

#include <gtest/gtest.h>

#include "generators.h"
#include "oracles.h"
#include "tropsp/conormal.h"
#include "tropsp/treespace.h"
#include "tropsp/zoo.h"

namespace tropsp {
namespace {

const TropNum kInf = TropNum::inf();

Subset lab(int n, std::initializer_list<int> xs) {
  Subset s;
  for (int x : xs) s = s.with(x > 0 ? x - 1 : n - x - 1);
  return s;
}

TropPoint point(std::initializer_list<TropNum> xs) {
  TropPoint p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const TropNum& x : xs) p(i++) = x;
  return p;
}

TEST(PairedGroundTest, BarAndLabels) {
  const PairedGround g{3};
  for (int i = 0; i < 6; ++i) {
    EXPECT_NE(g.bar(i), i);
    EXPECT_EQ(g.bar(g.bar(i)), i);
  }
  EXPECT_EQ(g.label(lab(3, {1, -2, 3})), "{1,3,~2}");
  EXPECT_TRUE(g.admissible(lab(3, {1, -2})));
  EXPECT_FALSE(g.admissible(lab(3, {2, -2})));
  EXPECT_THROW(paired_ground(ValuatedMatroid::uniform(1, 3)),
               std::invalid_argument);
}

TEST(SymplecticRelationsTest, MK4Passes) {
  EXPECT_TRUE(check_symplectic_relations(zoo_mk4()).verdict);
}

TEST(SymplecticRelationsTest, FourPointsFailsTheOnlyRelation) {
  const RelationReport r = check_symplectic_relations(zoo_four_points());
  ASSERT_FALSE(r.verdict);
  EXPECT_EQ(r.relations_checked, 1u);
  EXPECT_EQ(r.witnesses[0].terms,
            (std::vector<TropNum>{kInf, kInf, TropNum(0)}));
}

TEST(SymplecticRelationsTest, CubeFailsAllFourDiagonalRelations) {
  const RelationReport r =
      check_symplectic_relations(zoo_cube(), all_witnesses());
  ASSERT_FALSE(r.verdict);
  for (int i = 1; i <= 4; ++i) {
    const Subset s = lab(4, {i, -i});
    const bool listed =
        std::any_of(r.witnesses.begin(), r.witnesses.end(),
                    [&](const Witness& w) { return w.indices[0] == s; });
    EXPECT_TRUE(listed) << "S = {" << i << ",~" << i << "}";
  }
}

TEST(SymplecticRelationsTest, MatchesDefinition) {
  test::Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const int k = 2 + trial % (n - 1);
    const ValuatedMatroid mu = test::random_values(rng, k, 2 * n, 0.4);
    std::size_t failures = 0;
    for_each_subset(2 * n, k - 2, [&](Subset s) {
      if (!test::min_twice(test::symplectic_terms(mu, n, s))) ++failures;
    });
    EXPECT_EQ(check_symplectic_relations(mu, all_witnesses()).failures,
              failures);
  }
}

TEST(SymplecticRelationsTest, InvariantUnderBarRelabel) {
  test::Rng rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    const ValuatedMatroid mu = test::random_values(rng, 2 + trial % 2, 6, 0.4);
    EXPECT_EQ(check_symplectic_relations(mu).verdict,
              check_symplectic_relations(bar_relabel(mu)).verdict);
  }
}

TEST(SymplecticRelationsTest, NoSingletonRelationWhenRankAtMostN) {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 2; k <= n; ++k) {
      for_each_subset(2 * n, k - 2, [&](Subset s) {
        EXPECT_GE(test::symplectic_terms(ValuatedMatroid::uniform(k, 2 * n), n, s)
                      .size(),
                  2u);
      });
    }
  }
}

TEST(OrthogonalTest, TwoLinesRowsAreNotOrthogonal) {
  const TropPoint r1 = point({0, kInf, kInf, 0, 0, kInf, kInf, 0});
  const TropPoint r2 = point({0, 0, 0, kInf, kInf, 0, 0, kInf});
  const RelationReport r = orthogonal(r1, r2);
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.witnesses[0].multiplicity, 1u);
}

TEST(OrthogonalTest, RowsOfD) {
  EXPECT_TRUE(orthogonal(point({0, 0, 1, 1}), point({0, 0, 0, 0})).verdict);
}

TEST(OrthogonalTest, EveryPointIsSelfOrthogonal) {
  test::Rng rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const TropMatrix m = test::random_trop_matrix(rng, 1, 6, 0.3);
    const TropPoint x = m.row(0).transpose();
    EXPECT_TRUE(orthogonal(x, x).verdict);
  }
}

TEST(OrthogonalTest, LengthMismatchThrows) {
  EXPECT_THROW(orthogonal(point({0, 0}), point({0, 0, 0, 0})),
               std::invalid_argument);
}

TEST(IsotropyTest, LagrangianOnZoo) {
  EXPECT_TRUE(lagrangian_isotropy(zoo_cube()).verdict);
  const ValuatedMatroid e = stiefel(zoo_e_matrix());
  const RelationReport r = lagrangian_isotropy(e);
  ASSERT_FALSE(r.verdict);
  EXPECT_THROW(lagrangian_isotropy(zoo_four_points()), std::invalid_argument);
}

TEST(IsotropyTest, PluckerCriterionOnZoo) {
  EXPECT_TRUE(isotropy_plucker(zoo_four_points()).verdict);
  EXPECT_TRUE(isotropy_plucker(zoo_mk4()).verdict);
  EXPECT_FALSE(isotropy_plucker(stiefel(zoo_e_matrix())).verdict);
  EXPECT_THROW(isotropy_plucker(ValuatedMatroid::uniform(3, 4)),
               std::invalid_argument);
}

TEST(IsotropyTest, OracleOnZoo) {
  EXPECT_TRUE(isotropy_oracle(zoo_mk4()));
  EXPECT_TRUE(isotropy_oracle(zoo_four_points()));
  EXPECT_TRUE(isotropy_oracle(zoo_cube()));
  EXPECT_FALSE(isotropy_oracle(zoo_two_lines()));
}

TEST(IsotropyTest, ThreeCriteriaAgreeOnRandomInputs) {
  test::Rng rng(83);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 2;
    const int k = 1 + trial % n;
    const ValuatedMatroid mu = test::random_paired_matroid(rng, n, k);
    const bool plucker = isotropy_plucker(mu).verdict;
    EXPECT_EQ(plucker, isotropy_oracle(mu)) << "trial " << trial;
    if (k == n) {
      EXPECT_EQ(plucker, lagrangian_isotropy(mu).verdict);
    }
  }
}

TEST(IsotropyTest, ConormalIsLagrangian) {
  test::Rng rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    const ValuatedMatroid mu = conormal(test::random_transversal(rng, 2, 4));
    EXPECT_TRUE(lagrangian_isotropy(mu).verdict);
    EXPECT_TRUE(isotropy_oracle(mu));
  }
}

TEST(BarRelabelTest, InvolutionCommutingWithDual) {
  test::Rng rng(97);
  for (int trial = 0; trial < 30; ++trial) {
    const ValuatedMatroid mu = test::random_values(rng, 1 + trial % 3, 6);
    EXPECT_EQ(bar_relabel(bar_relabel(mu)), mu);
    EXPECT_EQ(bar_relabel(dual(mu)), dual(bar_relabel(mu)));
  }
}

TEST(BarRelabelTest, MK4BarIsItsDual) {
  EXPECT_EQ(bar_relabel(zoo_mk4()), dual(zoo_mk4()));
}

TEST(ExtendWithPairTest, Bookkeeping) {
  const ValuatedMatroid mu = zoo_mk4();
  const ValuatedMatroid a = extend_with_pair(mu, PairKind::kU02);
  const ValuatedMatroid b = extend_with_pair(mu, PairKind::kU12);
  EXPECT_EQ(a.ground_size(), 8);
  EXPECT_EQ(a.rank(), 3);
  EXPECT_EQ(b.ground_size(), 8);
  EXPECT_EQ(b.rank(), 4);
  // New pair is 4 and ~4; old ~1 moves from index 3 to index 4.
  EXPECT_EQ(a[lab(4, {1, 2, -3})], mu[lab(3, {1, 2, -3})]);
  EXPECT_TRUE(a[lab(4, {1, 2, 4})].is_inf());
  EXPECT_TRUE(b[lab(4, {1, 2, 4, -4})].is_inf());
  EXPECT_EQ(b[lab(4, {1, 2, -3, 4})], mu[lab(3, {1, 2, -3})]);
  EXPECT_EQ(b[lab(4, {1, 2, -3, -4})], mu[lab(3, {1, 2, -3})]);
}

TEST(ExtendWithPairTest, VerdictsUnchanged) {
  for (const ValuatedMatroid& mu : {zoo_mk4(), zoo_four_points()}) {
    for (PairKind kind : {PairKind::kU02, PairKind::kU12}) {
      const ValuatedMatroid x = extend_with_pair(mu, kind);
      EXPECT_EQ(in_symplectic_dressian(mu), in_symplectic_dressian(x));
      EXPECT_EQ(isotropy_oracle(mu), isotropy_oracle(x));
    }
  }
}

TEST(ExtendWithPairTest, PresentationMatchesMatroid) {
  const TropMatrix d = zoo_d_matrix();
  for (PairKind kind : {PairKind::kU02, PairKind::kU12}) {
    EXPECT_EQ(stiefel(extend_presentation(d, kind)),
              extend_with_pair(stiefel(d), kind));
  }
}

TEST(Rank2NormalizeTest, ShiftsDiagonalToMaximum) {
  // mu_ab = -(l_a + l_b): a point of the lineality space.
  const std::vector<int> l = {1, 2, 2, 2, 3, 2};
  const ValuatedMatroid mu = ValuatedMatroid::from_function(6, 2, [&](Subset j) {
    const auto e = j.elements();
    return TropNum(-(l[e[0]] + l[e[1]]));
  });
  ASSERT_EQ(mu[lab(3, {1, -1})], TropNum(-3));
  ASSERT_EQ(mu[lab(3, {2, -2})], TropNum(-5));
  ASSERT_EQ(mu[lab(3, {3, -3})], TropNum(-4));
  const auto r = symplectic_rank2_normalize(mu);
  ASSERT_TRUE(r.has_value());
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(r->mu[lab(3, {i, -i})], TropNum(-3));
  EXPECT_TRUE(in_symplectic_dressian(r->mu));
  // The difference lies in the lineality span.
  for_each_subset(6, 2, [&](Subset j) {
    const auto e = j.elements();
    EXPECT_EQ(r->mu[j], mu[j] + TropNum(r->shift[e[0]] + r->shift[e[1]]));
  });
}

TEST(Rank2NormalizeTest, EqualDiagonalIsFixed) {
  const ValuatedMatroid u = ValuatedMatroid::uniform(2, 6);
  const auto r = symplectic_rank2_normalize(u);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->mu, u);
}

TEST(Rank2NormalizeTest, SingleFiniteDiagonalFails) {
  EXPECT_FALSE(symplectic_rank2_normalize(zoo_four_points()).has_value());
  EXPECT_THROW(symplectic_rank2_normalize(zoo_mk4()), std::invalid_argument);
}

TEST(Rank2NormalizeTest, TreeMetricsLandInSymplecticDressian) {
  test::Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const ValuatedMatroid mu = tree_to_plucker(random_tree(6, rng));
    const auto r = symplectic_rank2_normalize(mu);
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(check_plucker(r->mu).verdict);
    EXPECT_TRUE(check_symplectic_relations(r->mu).verdict);
  }
}

TEST(AdmissibleBasesTest, UniformSquare) {
  const AdmissibleBasisSystem sys =
      admissible_bases(ValuatedMatroid::uniform(2, 4));
  EXPECT_EQ(sys.bases.size(), 4u);
  EXPECT_EQ(basis_point(sys, lab(2, {1, -2})), (std::vector<int>{1, -1}));
}

TEST(AdmissibleBasesTest, MK4KeepsAdmissibleSpanningTrees) {
  const ValuatedMatroid mk4 = zoo_mk4();
  const AdmissibleBasisSystem sys = admissible_bases(mk4);
  const PairedGround g{3};
  std::size_t expected = 0;
  for (Subset b : mk4.bases()) expected += g.admissible(b);
  EXPECT_EQ(sys.bases.size(), expected);
  for (Subset b : sys.bases) EXPECT_TRUE(g.admissible(b));
}

TEST(SymplecticMatroidTest, SympmatPasses) {
  const SymplecticMatroidReport r = check_symplectic_matroid(zoo_sympmat_system());
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.offending.empty());
  EXPECT_FALSE(r.edges.empty());
}

TEST(SymplecticMatroidTest, SquareEdges) {
  const SymplecticMatroidReport r =
      check_symplectic_matroid(admissible_bases(ValuatedMatroid::uniform(2, 4)));
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.edges.size(), 4u);  // four sides, no diagonals
}

TEST(SymplecticMatroidTest, DoubleSwapIsARootDirection) {
  // e_{12} = (1,1), e_{~1~2} = (-1,-1): one edge, parallel to e_1 + e_2.
  const AdmissibleBasisSystem sys{2, 2, {lab(2, {1, 2}), lab(2, {-1, -2})}};
  const SymplecticMatroidReport r = check_symplectic_matroid(sys);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.edges.size(), 1u);
}

TEST(SymplecticMatroidTest, SkewSegmentIsNotARootDirection) {
  // e_{12} = (1,1,0), e_{~13} = (-1,0,1): direction (-2,-1,1).
  const AdmissibleBasisSystem sys{3, 2, {lab(3, {1, 2}), lab(3, {-1, 3})}};
  const SymplecticMatroidReport r = check_symplectic_matroid(sys);
  EXPECT_FALSE(r.verdict);
  ASSERT_EQ(r.offending.size(), 1u);
}

TEST(SymplecticMatroidTest, RejectsNonAdmissible) {
  const AdmissibleBasisSystem sys{2, 2, {lab(2, {1, -1})}};
  EXPECT_THROW(check_symplectic_matroid(sys), std::invalid_argument);
}

TEST(SymplecticMatroidTest, IsotropicRowSpacesGiveSymplecticMatroids) {
  test::Rng rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 2;
    const int k = 1 + trial % n;
    const ValuatedMatroid mu =
        bases_from_rational_matrix(test::random_isotropic_rational(rng, k, n));
    const AdmissibleBasisSystem sys = admissible_bases(mu);
    ASSERT_FALSE(sys.bases.empty());
    EXPECT_TRUE(check_symplectic_matroid(sys).verdict) << "trial " << trial;
  }
}

}  // namespace
}  // namespace tropsp
