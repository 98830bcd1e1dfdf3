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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tropsp/trop_matrix.h"
#include "tropsp/valuated_matroid.h"

namespace tropsp {

/// Raised when every maximal tropical minor of a block is INF.
class NotFullRankError : public std::runtime_error {
 public:
  explicit NotFullRankError(std::string block)
      : std::runtime_error("not tropically full rank: " + block),
        block_(std::move(block)) {}
  const std::string& block() const { return block_; }

 private:
  std::string block_;
};

/// pi(A)_J = tdet(A_J) over all k-subsets J of the columns.
ValuatedMatroid stiefel(const TropMatrix& a, std::string name = {});

/// A k x 2n matrix read as (A|B) on the paired ground set.
class Presentation {
 public:
  explicit Presentation(TropMatrix ab);

  const TropMatrix& matrix() const { return ab_; }
  int n() const { return static_cast<int>(ab_.cols() / 2); }
  TropMatrix a() const { return ab_.leftCols(n()); }
  TropMatrix b() const { return ab_.rightCols(n()); }

 private:
  TropMatrix ab_;
};

struct RowOrthogonality {
  bool verdict = true;
  /// First offending row pair (0-based), rows compared in lexicographic order.
  std::optional<std::pair<int, int>> pair;
};

RowOrthogonality row_orthogonal(const Presentation& p);

struct Symmetry {
  bool verdict = true;
  /// First (i, j), i < j, with product(i, j) != product(j, i).
  std::optional<std::pair<int, int>> entry;
  TropMatrix product;  // A (.) B^T
};

Symmetry symmetric_presentation(const Presentation& p);

/// False only if the presentation is symmetric but not row-orthogonal.
bool symmetric_implies_orthogonal_check(const Presentation& p);

/// Components of a flag, ranks 1, 2, ... on a common ground set.
using FlagVector = std::vector<ValuatedMatroid>;

/// Rank-k component: tdet of rows 1..k on columns S, for k = 1..n-1 of a
/// square n x n matrix. Throws NotFullRankError naming the first bad block.
FlagVector flag_stiefel_A(const TropMatrix& a);

/// Type C: n x 2n matrix, components k = 1..n on the paired ground set.
FlagVector flag_stiefel_C(const TropMatrix& a);

/// A(i,i) = 0, A(i,j) = INF below the diagonal, and
/// A(i,j) + A(i+1,j+1) >= A(i+1,j) + A(i,j+1) for 0 <= i < j <= n-2.
bool in_fffm_cone(const TropMatrix& a);

/// With k = |B|, p_1 > ... > p_l the elements of B outside {0..k-1} and
/// q_1 < ... < q_l the elements of {0..k-1} outside B, returns
/// sum_i A(q_i, p_i). Meaningful for matrices in the cone.
TropNum fffm_closed_form(const TropMatrix& a, Subset b);

}  // namespace tropsp
