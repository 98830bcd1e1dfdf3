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

#include "tropsp/stiefel.h"

#include <algorithm>

#include "tropsp/symplectic.h"

namespace tropsp {

namespace {

std::string rows_label(Eigen::Index k) {
  return k == 1 ? "row 1" : "rows 1.." + std::to_string(k);
}

FlagVector flag_stiefel(const TropMatrix& a, Eigen::Index top) {
  FlagVector out;
  for (Eigen::Index k = 1; k <= top; ++k) {
    if (!tropically_full_rank(a.topRows(k))) {
      throw NotFullRankError(rows_label(k));
    }
    out.push_back(stiefel(a.topRows(k), "rank " + std::to_string(k)));
  }
  return out;
}

}  // namespace

ValuatedMatroid stiefel(const TropMatrix& a, std::string name) {
  const int k = static_cast<int>(a.rows());
  const int m = static_cast<int>(a.cols());
  if (k == 0 || k > m || !tropically_full_rank(a)) {
    throw NotFullRankError(rows_label(k));
  }
  return ValuatedMatroid::from_function(
      m, k, [&](Subset j) { return tdet(select_columns(a, j)); },
      std::move(name));
}

Presentation::Presentation(TropMatrix ab) : ab_(std::move(ab)) {
  if (ab_.cols() % 2 != 0 || ab_.rows() == 0) {
    throw std::invalid_argument(
        "Presentation: need k >= 1 rows and an even column count");
  }
}

RowOrthogonality row_orthogonal(const Presentation& p) {
  const TropMatrix& m = p.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.rows(); ++j) {
      if (!orthogonal(m.row(i).transpose(), m.row(j).transpose()).verdict) {
        return {false, std::make_pair(static_cast<int>(i), static_cast<int>(j))};
      }
    }
  }
  return {};
}

Symmetry symmetric_presentation(const Presentation& p) {
  Symmetry out;
  out.product = tmatmul(p.a(), p.b().transpose());
  for (Eigen::Index i = 0; i < out.product.rows() && out.verdict; ++i) {
    for (Eigen::Index j = i + 1; j < out.product.cols(); ++j) {
      if (!(out.product(i, j) == out.product(j, i))) {
        out.verdict = false;
        out.entry = std::make_pair(static_cast<int>(i), static_cast<int>(j));
        break;
      }
    }
  }
  return out;
}

bool symmetric_implies_orthogonal_check(const Presentation& p) {
  return !symmetric_presentation(p).verdict || row_orthogonal(p).verdict;
}

FlagVector flag_stiefel_A(const TropMatrix& a) {
  if (a.rows() != a.cols() || a.rows() < 2) {
    throw std::invalid_argument("flag_stiefel_A: need a square n x n, n >= 2");
  }
  return flag_stiefel(a, a.rows() - 1);
}

FlagVector flag_stiefel_C(const TropMatrix& a) {
  if (a.cols() != 2 * a.rows() || a.rows() < 1) {
    throw std::invalid_argument("flag_stiefel_C: need an n x 2n matrix");
  }
  return flag_stiefel(a, a.rows());
}

bool in_fffm_cone(const TropMatrix& a) {
  if (a.rows() != a.cols()) return false;
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(a(i, i) == TropNum(0))) return false;
    for (Eigen::Index j = 0; j < i; ++j) {
      if (a(i, j).is_finite()) return false;
    }
  }
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    for (Eigen::Index j = i + 1; j + 1 < n; ++j) {
      if (a(i, j) + a(i + 1, j + 1) < a(i + 1, j) + a(i, j + 1)) return false;
    }
  }
  return true;
}

TropNum fffm_closed_form(const TropMatrix& a, Subset b) {
  const int k = b.size();
  const Subset head = Subset::full(k);
  std::vector<int> p = (b - head).elements();
  std::vector<int> q = (head - b).elements();
  std::reverse(p.begin(), p.end());
  TropNum sum(0);
  for (std::size_t i = 0; i < p.size(); ++i) sum += a(q[i], p[i]);
  return sum;
}

}  // namespace tropsp
