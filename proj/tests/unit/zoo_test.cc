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

#include "tropsp/zoo.h"

#include <gtest/gtest.h>

#include <set>

#include "tropsp/conormal.h"

namespace tropsp {
namespace {

TEST(ZooTest, CorpusShape) {
  const std::vector<ZooEntry> corpus = build_corpus();
  ASSERT_EQ(corpus.size(), 9u);
  std::set<std::string> names;
  for (const ZooEntry& e : corpus) {
    names.insert(e.name);
    EXPECT_FALSE(e.expected.empty()) << e.name;
  }
  EXPECT_EQ(names.size(), 9u);
}

TEST(ZooTest, EveryEntryIsAValuatedMatroid) {
  for (const ZooEntry& e : build_corpus()) {
    EXPECT_TRUE(check_plucker(e.mu).verdict) << e.name;
    if (e.paired) {
      EXPECT_EQ(e.mu.ground_size() % 2, 0) << e.name;
    }
  }
}

TEST(ZooTest, MK4BarRelabelIsDual) {
  const ValuatedMatroid mu = zoo_mk4();
  EXPECT_EQ(mu.ground_size(), 6);
  EXPECT_EQ(mu.rank(), 3);
  EXPECT_EQ(bar_relabel(mu), dual(mu));
}

TEST(ZooTest, MK4QuadricIsATropicalBasisWitness) {
  const ValuatedMatroid mu = zoo_mk4();
  const std::vector<PluckerMonomial> q = mk4_quadric();
  ASSERT_EQ(q.size(), 5u);
  const MinTwice five = trop_poly_min_twice(mu, q);
  EXPECT_FALSE(five.verdict);
  EXPECT_EQ(five.multiplicity, 1u);
  // The minimum sits on the last monomial, which uses non-admissible sets.
  const PluckerMonomial& last = q.back();
  EXPECT_EQ(mu[last[0]] + mu[last[1]], five.min);
  const MinTwice four = trop_poly_min_twice(
      mu, std::vector<PluckerMonomial>(q.begin(), q.end() - 1));
  EXPECT_TRUE(four.verdict);
  EXPECT_EQ(four.multiplicity, 4u);
}

TEST(ZooTest, MK4PassesEveryRelationFamily) {
  const ValuatedMatroid mu = zoo_mk4();
  EXPECT_TRUE(check_symplectic_relations(mu).verdict);
  EXPECT_TRUE(isotropy_plucker(mu).verdict);
  EXPECT_TRUE(lagrangian_isotropy(mu).verdict);
}

TEST(ZooTest, DExampleIsSpdrButNotSymmetric) {
  const ValuatedMatroid mu = stiefel(zoo_d_matrix());
  EXPECT_TRUE(check_symplectic_relations(mu).verdict);
  EXPECT_FALSE(symmetric_presentation(Presentation(zoo_d_matrix())).verdict);
}

TEST(ZooTest, FourPointsIsIsotropicNotSpdr) {
  const ValuatedMatroid mu = zoo_four_points();
  EXPECT_TRUE(isotropy_plucker(mu).verdict);
  const RelationReport r = check_symplectic_relations(mu);
  EXPECT_FALSE(r.verdict);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_FALSE(symplectic_rank2_normalize(mu).has_value());
}

TEST(ZooTest, FailuresCarryWitnesses) {
  const ZooReport report = run_zoo();
  for (const ZooRow& row : report.rows) {
    if (row.predicate == "plucker" || row.predicate == "symplectic" ||
        row.predicate == "isotropic") {
      if (!row.computed) {
        EXPECT_FALSE(row.witness.empty()) << row.entry;
      }
    }
  }
}

TEST(ZooTest, SympmatSystemIsASymplecticMatroid) {
  const AdmissibleBasisSystem sys = zoo_sympmat_system();
  EXPECT_EQ(sys.n, 3);
  EXPECT_EQ(sys.k, 2);
  EXPECT_EQ(sys.bases.size(), 8u);
  EXPECT_TRUE(check_symplectic_matroid(sys).verdict);
  EXPECT_EQ(admissible_bases(zoo_sympmat_completion()).bases, sys.bases);
}

TEST(ZooTest, NonPappusMinors) {
  const ValuatedMatroid mu = zoo_non_pappus();
  const Subset x = Subset::of({kNonPappusX});
  const ValuatedMatroid del = minor(mu, x, Subset());
  const ValuatedMatroid con = minor(mu, Subset(), x);
  EXPECT_EQ(del.rank(), 3);
  EXPECT_EQ(con.rank(), 2);
  EXPECT_TRUE(incidence(con, del).verdict);
}

TEST(ZooTest, StabilityUnderExtension) {
  for (const ZooEntry& e : build_corpus()) {
    for (const ZooCheck& c : extension_stability(e)) {
      EXPECT_TRUE(c.holds) << c.name << ": " << c.detail;
    }
  }
}

}  // namespace
}  // namespace tropsp
