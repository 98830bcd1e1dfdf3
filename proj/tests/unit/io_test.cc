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

#include "tropsp/io.h"

#include <gtest/gtest.h>

#include <random>

#include "tropsp/zoo.h"

namespace tropsp {
namespace {

const TropNum kInf = TropNum::inf();

ParseError matroid_error(std::string_view text) {
  try {
    parse_matroid(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return ParseError(0, 0, "");
}

TEST(MatroidFileTest, DenseValues) {
  const MatroidFile f = parse_matroid(
      R"({"ground": 4, "rank": 2, "values": [0, "1/2", "-3", "inf", "0.25", 1]})");
  EXPECT_FALSE(f.paired);
  EXPECT_EQ(f.mu.rank(), 2);
  EXPECT_EQ(f.mu[Subset::of({0, 1})], TropNum(0));
  EXPECT_EQ(f.mu[Subset::of({0, 2})], TropNum(Rational(1, 2)));
  EXPECT_EQ(f.mu[Subset::of({0, 3})], kInf);
  EXPECT_EQ(f.mu[Subset::of({1, 3})], TropNum(Rational(1, 4)));
}

TEST(MatroidFileTest, EntriesDefaultToInf) {
  const MatroidFile f = parse_matroid(R"({
    "ground": 4, "paired": true, "rank": 2,
    "entries": [{"subset": [1, 3], "value": "0"},
                {"subset": [2, 4], "value": "2"}]
  })");
  EXPECT_TRUE(f.paired);
  EXPECT_EQ(f.mu[Subset::of({1, 3})], TropNum(2));
  EXPECT_EQ(f.mu[Subset::of({0, 1})], kInf);
}

TEST(MatroidFileTest, RoundTripIsByteIdentical) {
  for (const ZooEntry& e : build_corpus()) {
    const std::string s = serialize_matroid(e.mu, e.paired);
    const MatroidFile f = parse_matroid(s);
    EXPECT_EQ(f.mu, e.mu) << e.name;
    EXPECT_EQ(f.paired, e.paired);
    EXPECT_EQ(serialize_matroid(f.mu, f.paired), s);
  }
}

TEST(MatroidFileTest, ErrorsCarryPosition) {
  {
    const ParseError e = matroid_error(
        "{\"ground\": 4, \"rank\": 2,\n \"values\": [0, 0, \"x1\", 0, 0, 0]}");
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 19);
    EXPECT_NE(std::string(e.what()).find("malformed value 'x1'"),
              std::string::npos);
  }
  {
    const ParseError e =
        matroid_error("{\"ground\": 4, \"rank\": 2, \"colour\": 1, \"values\": []}");
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 36);
  }
  {
    const ParseError e = matroid_error("{\"ground\": 4,\n\n  \"rank\": 2,");
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(MatroidFileTest, Rejections) {
  matroid_error(R"({"ground": 4, "rank": 2, "values": [0, 0, 0]})");
  matroid_error(R"({"ground": 3, "paired": true, "rank": 1, "values": [0, 0, 0]})");
  matroid_error(R"({"ground": 4, "rank": 2})");
  matroid_error(R"({"ground": 21, "rank": 1, "values": []})");
  matroid_error(R"({"ground": 3, "rank": 1, "values": [0, 0, 0],
                    "entries": []})");
  matroid_error(R"({"ground": 3, "rank": 1,
                    "entries": [{"subset": [1], "value": 0, "w": 1}]})");
  matroid_error(R"({"ground": 3, "rank": 1,
                    "entries": [{"subset": [4], "value": 0}]})");
  matroid_error(R"({"ground": 3, "rank": 2,
                    "entries": [{"subset": [1], "value": 0}]})");
  matroid_error(R"({"ground": 3, "rank": 1,
                    "entries": [{"subset": [1], "value": 0},
                                {"subset": [1], "value": 1}]})");
  // All values INF.
  matroid_error(R"({"ground": 3, "rank": 1, "values": ["inf", "inf", "inf"]})");
}

TEST(MatrixFileTest, ParseAndSplit) {
  const MatrixFile f = parse_matrix("# E\n0 1 | 0 1\n0 0 | 0 0\n");
  EXPECT_TRUE(f.split);
  EXPECT_EQ(f.matrix, zoo_e_matrix());
  EXPECT_EQ(serialize_matrix(f.matrix, true), "0 1 | 0 1\n0 0 | 0 0\n");
  const MatrixFile g = parse_matrix("1/2 inf -3\n\n0.5 0 0\n");
  EXPECT_FALSE(g.split);
  EXPECT_EQ(g.matrix(0, 0), g.matrix(1, 0));
  EXPECT_TRUE(g.matrix(0, 1).is_inf());
}

TEST(MatrixFileTest, RoundTrip) {
  std::mt19937_64 rng(181);
  std::uniform_int_distribution<int> v(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    TropMatrix m(3, 4);
    for (Eigen::Index i = 0; i < 3; ++i) {
      for (Eigen::Index j = 0; j < 4; ++j) {
        const int x = v(rng);
        m(i, j) = x == 9 ? kInf : TropNum(Rational(x, 1 + trial % 3));
      }
    }
    const bool split = trial % 2 == 0;
    const MatrixFile f = parse_matrix(serialize_matrix(m, split));
    EXPECT_EQ(f.matrix, m);
    EXPECT_EQ(f.split, split);
  }
}

TEST(MatrixFileTest, Errors) {
  auto where = [](std::string_view text) {
    try {
      parse_matrix(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(0, 0);
  };
  EXPECT_EQ(where("0 0\n0 abc\n"), std::make_pair(2, 3));
  EXPECT_EQ(where("0 0\n0 0 0\n"), std::make_pair(2, 1));
  EXPECT_EQ(where("0 | 0 0\n"), std::make_pair(1, 1));
  EXPECT_EQ(where("0 | 0\n0 0 |\n"), std::make_pair(2, 1));
  EXPECT_EQ(where("0 | | 0\n"), std::make_pair(1, 5));
  EXPECT_NE(where("\n# nothing\n").first, 0);
}

TEST(BasisSystemTest, BasesAndNonBasesAgree) {
  const AdmissibleBasisSystem a = parse_basis_system(
      R"({"n": 3, "rank": 2, "non_bases": [[1, 2], [1, 5], [4, 3], [4, 6]]})");
  EXPECT_EQ(a.bases, zoo_sympmat_system().bases);
  std::string listed = R"({"n": 3, "rank": 2, "bases": [)";
  for (std::size_t i = 0; i < a.bases.size(); ++i) {
    if (i) listed += ", ";
    std::string s = "[";
    const auto el = a.bases[i].elements();
    s += std::to_string(el[0] + 1) + ", " + std::to_string(el[1] + 1) + "]";
    listed += s;
  }
  listed += "]}";
  EXPECT_EQ(parse_basis_system(listed).bases, a.bases);
}

TEST(BasisSystemTest, Rejections) {
  EXPECT_THROW(parse_basis_system(R"({"n": 3, "rank": 2, "bases": [[1, 4]]})"),
               ParseError);
  EXPECT_THROW(parse_basis_system(R"({"n": 3, "rank": 2, "bases": [[1]]})"),
               ParseError);
  EXPECT_THROW(parse_basis_system(R"({"n": 3, "rank": 2, "bases": []})"),
               ParseError);
  EXPECT_THROW(parse_basis_system(R"({"n": 3, "rank": 4, "bases": []})"),
               ParseError);
}

TEST(ReportJsonTest, WitnessLabels) {
  const RelationReport r = check_symplectic_relations(zoo_four_points());
  const nlohmann::ordered_json j = report_json(r, 2);
  EXPECT_EQ(j["verdict"], "fail");
  ASSERT_FALSE(j["witnesses"].empty());
  EXPECT_EQ(j["witnesses"][0]["relation"], "symplectic");
  const auto keys = {"verdict", "relations", "failures", "witnesses",
                     "truncated"};
  auto it = j.begin();
  for (const char* k : keys) {
    ASSERT_NE(it, j.end());
    EXPECT_EQ(it.key(), k);
    ++it;
  }
}

}  // namespace
}  // namespace tropsp
