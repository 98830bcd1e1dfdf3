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

#pragma once

#include <vector>

#include <Eigen/Core>

#include "tropsp/subset.h"
#include "tropsp/trop_num.h"

namespace Eigen {

// Storage-only scalar traits. Eigen arithmetic is never applied to these
// types; the min-plus operations are the free functions below.
template <>
struct NumTraits<tropsp::TropNum> : GenericNumTraits<tropsp::TropNum> {
  using Real = tropsp::TropNum;
  using NonInteger = tropsp::TropNum;
  using Nested = tropsp::TropNum;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  // Exact type: no precision to report when streaming.
  static int digits10() { return 0; }
  static int max_digits10() { return 0; }
};

template <>
struct NumTraits<tropsp::Rational> : GenericNumTraits<tropsp::Rational> {
  using Real = tropsp::Rational;
  using NonInteger = tropsp::Rational;
  using Nested = tropsp::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  // Exact type: no precision to report when streaming.
  static int digits10() { return 0; }
  static int max_digits10() { return 0; }
};

}  // namespace Eigen

namespace tropsp {

using TropMatrix = Eigen::Matrix<TropNum, Eigen::Dynamic, Eigen::Dynamic>;
using TropVector = Eigen::Matrix<TropNum, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// A point of the tropical torus/projective space: one coordinate per
/// ground element.
using TropPoint = TropVector;

/// Builds a matrix from nested initializer rows; handy in tests and the zoo.
TropMatrix make_trop_matrix(
    std::initializer_list<std::initializer_list<TropNum>> rows);
RationalMatrix make_rational_matrix(
    std::initializer_list<std::initializer_list<Rational>> rows);

/// Min-plus product: (A (.) B)(i,j) = min_l A(i,l) + B(l,j).
/// Throws std::invalid_argument on an inner-dimension mismatch.
TropMatrix tmatmul(const TropMatrix& a, const TropMatrix& b);

/// Tropical determinant (min over permutations of the diagonal sums).
///
/// Solved as an assignment problem with the shortest-augmenting-path
/// Hungarian method in O(k^3); INF entries are forbidden assignments. Returns
/// INF iff no permutation has a finite sum.
TropNum tdet(const TropMatrix& m);

/// True iff some maximal (k x k, k = rows <= cols) minor is finite, i.e. the
/// finite entries admit a matching saturating every row.
bool tropically_full_rank(const TropMatrix& m);

/// Column submatrix A_J, columns in increasing order.
TropMatrix select_columns(const TropMatrix& m, Subset columns);

bool all_inf(const TropMatrix& m);

}  // namespace tropsp
