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

#include "generators.h"

#include <algorithm>
#include <numeric>

#include "tropsp/conormal.h"
#include "tropsp/treespace.h"

namespace tropsp::test {

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

}  // namespace

TropNum random_value(Rng& rng, int lo, int hi) {
  const int v = uniform_int(rng, 2 * lo, 2 * hi);
  if (coin(rng, 0.25)) return TropNum(Rational(v, 2));
  return TropNum(v / 2);
}

TropMatrix random_trop_matrix(Rng& rng, int rows, int cols,
                              double inf_density, int lo, int hi) {
  TropMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = coin(rng, inf_density) ? TropNum::inf()
                                       : random_value(rng, lo, hi);
    }
  }
  return m;
}

RationalMatrix random_rational_matrix(Rng& rng, int rows, int cols, int lo,
                                      int hi) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(uniform_int(rng, lo, hi));
  }
  return m;
}

TropMatrix random_full_rank(Rng& rng, int rows, int cols,
                            double inf_density) {
  for (;;) {
    TropMatrix m = random_trop_matrix(rng, rows, cols, inf_density);
    if (tropically_full_rank(m)) return m;
  }
}

ValuatedMatroid random_transversal(Rng& rng, int k, int m,
                                   double inf_density) {
  return stiefel(random_full_rank(rng, k, m, inf_density));
}

ValuatedMatroid random_values(Rng& rng, int k, int m, double inf_density) {
  std::vector<TropNum> values(binomial(m, k));
  for (;;) {
    bool any = false;
    for (TropNum& v : values) {
      v = coin(rng, inf_density) ? TropNum::inf() : random_value(rng);
      any = any || v.is_finite();
    }
    if (any) return ValuatedMatroid(m, k, values);
  }
}

ValuatedMatroid random_paired_matroid(Rng& rng, int n, int k) {
  for (;;) {
    switch (uniform_int(rng, 0, 4)) {
      case 0:
        return random_transversal(rng, k, 2 * n);
      case 1:
        if (k == n && n >= 2) {
          return conormal(random_transversal(rng, uniform_int(rng, 1, n - 1), n));
        }
        break;
      case 2: {
        RationalMatrix a = random_rational_matrix(rng, k, 2 * n, -1, 1);
        if (rational_rank(a) == k) return bases_from_rational_matrix(a);
        break;
      }
      case 3:
        return bases_from_rational_matrix(random_isotropic_rational(rng, k, n));
      case 4:
        if (k == 2) {
          return tree_to_plucker(random_lengths(random_tree(2 * n, rng), rng));
        }
        break;
    }
  }
}

TropMatrix random_fffm_cone(Rng& rng, int n) {
  TropMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = j < i ? TropNum::inf() : TropNum(0);
  }
  for (int j = 1; j < n; ++j) a(0, j) = random_value(rng);
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j + 1 < n; ++j) {
      a(i + 1, j + 1) = TropNum(a(i + 1, j).value() + a(i, j + 1).value() -
                                a(i, j).value() + uniform_int(rng, 0, 3));
    }
  }
  return a;
}

RationalMatrix random_isotropic_rational(Rng& rng, int k, int n) {
  RationalMatrix m = RationalMatrix::Constant(k, 2 * n, Rational(0));
  for (int i = 0; i < k; ++i) m(i, i) = 1;
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      m(i, n + j) = m(j, n + i) = Rational(uniform_int(rng, -2, 2));
    }
    for (int j = k; j < n; ++j) m(i, n + j) = Rational(uniform_int(rng, -2, 2));
  }
  return m;
}

BlockFamilyCase random_block_family(Rng& rng, int n, bool force_block) {
  for (;;) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    // Parts: -1 loop, +1 coloop, otherwise a block of the given size >= 2.
    std::vector<std::vector<int>> blocks;
    std::vector<int> loops, coloops;
    std::size_t pos = 0;
    while (pos < order.size()) {
      const int left = n - static_cast<int>(pos);
      const int kind = uniform_int(rng, 0, 2);
      if (kind == 2 && left >= 2) {
        const int size = uniform_int(rng, 2, std::min(left, 3));
        blocks.emplace_back(order.begin() + pos, order.begin() + pos + size);
        pos += size;
      } else if (kind == 1) {
        coloops.push_back(order[pos++]);
      } else {
        loops.push_back(order[pos++]);
      }
    }
    int k = static_cast<int>(coloops.size() + blocks.size());
    if (k < 1 || k > n - 1) continue;
    if (force_block && blocks.empty()) continue;

    std::vector<std::vector<TropNum>> rows_a, rows_b;
    auto blank = [n] { return std::vector<TropNum>(n, TropNum::inf()); };
    for (int c : coloops) {
      rows_a.push_back(blank());
      rows_a.back()[c] = TropNum(0);
    }
    for (int l : loops) {
      rows_b.push_back(blank());
      rows_b.back()[l] = TropNum(0);
    }
    for (const auto& block : blocks) {
      std::vector<TropNum> ra = blank(), rb = blank();
      for (int e : block) {
        TropNum w = random_value(rng);
        ra[e] = w;
        rb[e] = TropNum(-w.value());
      }
      rows_a.push_back(ra);
      for (std::size_t r = 0; r + 1 < block.size(); ++r) rows_b.push_back(rb);
    }
    auto assemble = [&](std::vector<std::vector<TropNum>> rows) {
      std::shuffle(rows.begin(), rows.end(), rng);
      TropMatrix m(static_cast<Eigen::Index>(rows.size()), n);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const TropNum shift = random_value(rng);
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j] + shift;
      }
      return m;
    };
    return {assemble(rows_a), assemble(rows_b), !blocks.empty()};
  }
}

}  // namespace tropsp::test
