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

#include "tropsp/rational_lp.h"

#include <stdexcept>

namespace tropsp {

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols)
      : t_(rows, std::vector<Rational>(cols + 1)), obj_(cols + 1),
        basis_(rows, -1), allowed_(cols, 1) {}

  std::vector<Rational>& row(int i) { return t_[i]; }
  int rows() const { return static_cast<int>(t_.size()); }
  int cols() const { return static_cast<int>(obj_.size()) - 1; }
  int& basic(int i) { return basis_[i]; }
  void forbid(int j) { allowed_[j] = 0; }
  const Rational& value() const { return obj_.back(); }

  // Reduced costs for maximizing c.x under the current basis.
  void set_objective(const std::vector<Rational>& c) {
    for (int j = 0; j <= cols(); ++j) {
      obj_[j] = j < cols() ? Rational(-c[j]) : Rational(0);
    }
    for (int i = 0; i < rows(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= cols(); ++j) obj_[j] += cb * t_[i][j];
    }
  }

  void pivot(int r, int col) {
    const Rational p = t_[r][col];
    for (Rational& x : t_[r]) x /= p;
    for (int i = 0; i < rows(); ++i) {
      if (i == r || t_[i][col] == 0) continue;
      const Rational f = t_[i][col];
      for (int j = 0; j <= cols(); ++j) t_[i][j] -= f * t_[r][j];
    }
    if (obj_[col] != 0) {
      const Rational f = obj_[col];
      for (int j = 0; j <= cols(); ++j) obj_[j] -= f * t_[r][j];
    }
    basis_[r] = col;
  }

  // Returns false when unbounded.
  bool optimize() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (allowed_[j] && obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows(); ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i].back() / t_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(int i) {
    t_.erase(t_.begin() + i);
    basis_.erase(basis_.begin() + i);
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> obj_;
  std::vector<int> basis_;
  std::vector<char> allowed_;
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
  const int m = static_cast<int>(lp.a.size());
  const int n = lp.num_vars;
  if (lp.sense.size() != lp.a.size() || lp.b.size() != lp.a.size() ||
      static_cast<int>(lp.c.size()) != n) {
    throw std::invalid_argument("solve: inconsistent LP dimensions");
  }

  // Column layout: structural | slack/surplus (one per inequality) | artificial.
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  int cols = n;
  for (int i = 0; i < m; ++i) {
    if (lp.sense[i] != Sense::kEq) slack_col[i] = cols++;
  }
  const int first_art = cols;
  for (int i = 0; i < m; ++i) {
    const bool neg = lp.b[i] < 0;
    const Sense s = lp.sense[i];
    const bool needs_art =
        s == Sense::kEq || (s == Sense::kGe && !neg) || (s == Sense::kLe && neg);
    if (needs_art) art_col[i] = cols++;
  }

  Tableau tab(m, cols);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(lp.a[i].size()) != n) {
      throw std::invalid_argument("solve: ragged constraint row");
    }
    const int sign = lp.b[i] < 0 ? -1 : 1;
    std::vector<Rational>& r = tab.row(i);
    for (int j = 0; j < n; ++j) r[j] = sign * lp.a[i][j];
    if (slack_col[i] >= 0) {
      r[slack_col[i]] = (lp.sense[i] == Sense::kLe ? 1 : -1) * sign;
    }
    if (art_col[i] >= 0) r[art_col[i]] = 1;
    r[cols] = sign * lp.b[i];
    tab.basic(i) = art_col[i] >= 0 ? art_col[i] : slack_col[i];
  }

  LpResult out;
  if (first_art < cols) {
    std::vector<Rational> phase1(cols);
    for (int j = first_art; j < cols; ++j) phase1[j] = -1;
    tab.set_objective(phase1);
    tab.optimize();
    if (tab.value() < 0) return out;
    for (int i = tab.rows() - 1; i >= 0; --i) {
      if (tab.basic(i) < first_art) continue;
      int col = -1;
      for (int j = 0; j < first_art && col < 0; ++j) {
        if (tab.row(i)[j] != 0) col = j;
      }
      if (col >= 0) {
        tab.pivot(i, col);
      } else {
        tab.drop_row(i);
      }
    }
    for (int j = first_art; j < cols; ++j) tab.forbid(j);
  }

  std::vector<Rational> c(cols);
  for (int j = 0; j < n; ++j) c[j] = lp.c[j];
  tab.set_objective(c);
  if (!tab.optimize()) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.value = tab.value();
  out.x.assign(n, Rational(0));
  for (int i = 0; i < tab.rows(); ++i) {
    if (tab.basic(i) < n) out.x[tab.basic(i)] = tab.row(i)[cols];
  }
  return out;
}

}  // namespace tropsp
