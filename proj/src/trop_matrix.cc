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

#include <stdexcept>

namespace tropsp {

TropMatrix make_trop_matrix(
    std::initializer_list<std::initializer_list<TropNum>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c =
      r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  TropMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c) {
      throw std::invalid_argument("make_trop_matrix: ragged rows");
    }
    Eigen::Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

RationalMatrix make_rational_matrix(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c =
      r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  RationalMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c) {
      throw std::invalid_argument("make_rational_matrix: ragged rows");
    }
    Eigen::Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

TropMatrix tmatmul(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("tmatmul: inner dimensions differ");
  }
  TropMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      TropNum acc;
      for (Eigen::Index l = 0; l < a.cols(); ++l) {
        acc = oplus(acc, a(i, l) + b(l, j));
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

TropNum tdet(const TropMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("tdet: matrix is not square");
  }
  const int n = static_cast<int>(m.rows());
  if (n == 0) return TropNum(0);

  // 1-based potentials; column 0 is the virtual source.
  std::vector<Rational> u(n + 1), v(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<TropNum> minv(n + 1);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      TropNum delta;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const TropNum& a = m(i0 - 1, j - 1);
        if (a.is_finite()) {
          TropNum cur(Rational(a.value() - u[i0] - v[j]));
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      // No finite edge leaves the alternating tree: row i cannot be matched.
      if (delta.is_inf()) return TropNum::inf();
      const Rational& d = delta.value();
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += d;
          v[j] -= d;
        } else if (minv[j].is_finite()) {
          minv[j] = TropNum(Rational(minv[j].value() - d));
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  TropNum total(0);
  for (int j = 1; j <= n; ++j) total += m(p[j] - 1, j - 1);
  return total;
}

namespace {

bool augment(const TropMatrix& m, int row, std::vector<int>& match_col,
             std::vector<char>& seen) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (m(row, c).is_inf() || seen[c]) continue;
    seen[c] = 1;
    if (match_col[c] < 0 || augment(m, match_col[c], match_col, seen)) {
      match_col[c] = row;
      return true;
    }
  }
  return false;
}

}  // namespace

bool tropically_full_rank(const TropMatrix& m) {
  if (m.rows() > m.cols() || m.rows() == 0) return false;
  std::vector<int> match_col(m.cols(), -1);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::vector<char> seen(m.cols(), 0);
    if (!augment(m, static_cast<int>(r), match_col, seen)) return false;
  }
  return true;
}

TropMatrix select_columns(const TropMatrix& m, Subset columns) {
  TropMatrix out(m.rows(), columns.size());
  Eigen::Index j = 0;
  for (int c : columns.elements()) {
    if (c >= m.cols()) {
      throw std::out_of_range("select_columns: column out of range");
    }
    out.col(j++) = m.col(c);
  }
  return out;
}

bool all_inf(const TropMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_finite()) return false;
    }
  }
  return true;
}

}  // namespace tropsp
