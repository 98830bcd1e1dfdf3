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

#include <cstdlib>
#include <stdexcept>

#include "tropsp/rational_lp.h"

namespace tropsp {

std::string PairedGround::label(int i) const {
  return i < n ? std::to_string(i + 1) : "~" + std::to_string(i - n + 1);
}

std::string PairedGround::label(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += label(e);
    first = false;
  }
  return out + "}";
}

PairedGround paired_ground(const ValuatedMatroid& mu) {
  if (mu.ground_size() % 2 != 0) {
    throw std::invalid_argument("paired ground set needs an even size, got " +
                                std::to_string(mu.ground_size()));
  }
  return PairedGround{mu.ground_size() / 2};
}

RelationReport check_symplectic_relations(const ValuatedMatroid& mu,
                                          const CheckOptions& options) {
  const PairedGround g = paired_ground(mu);
  const int k = mu.rank();
  if (k < 2) return {};
  return evaluate_family("symplectic", binomial(g.size(), k - 2), options,
                         [&](std::size_t o, RelationSink& sink) {
    const Subset s = colex_unrank(o, k - 2);
    std::vector<TropNum> terms;
    for (int i = 0; i < g.n; ++i) {
      if (s.contains(i) || s.contains(g.bar(i))) continue;
      terms.push_back(mu[s.with(i).with(g.bar(i))]);
    }
    sink.add({s}, std::move(terms));
  });
}

bool in_symplectic_dressian(const ValuatedMatroid& mu,
                            const CheckOptions& options) {
  return check_plucker(mu, options).verdict &&
         check_symplectic_relations(mu, options).verdict;
}

RelationReport orthogonal(const TropPoint& x, const TropPoint& y) {
  if (x.size() != y.size() || x.size() % 2 != 0) {
    throw std::invalid_argument("orthogonal: points need equal even length");
  }
  const PairedGround g{static_cast<int>(x.size() / 2)};
  std::vector<TropNum> terms;
  for (int i = 0; i < g.size(); ++i) terms.push_back(x(i) + y(g.bar(i)));
  RelationSink sink("orthogonal", 1);
  sink.add({}, std::move(terms));
  return sink.take();
}

RelationReport lagrangian_isotropy(const ValuatedMatroid& mu,
                                   const CheckOptions& options) {
  const PairedGround g = paired_ground(mu);
  if (mu.rank() != g.n) {
    throw std::invalid_argument(
        "lagrangian_isotropy: rank must equal n; use isotropy_plucker");
  }
  return evaluate_family("lagrangian", binomial(g.size(), g.n), options,
                         [&](std::size_t o, RelationSink& sink) {
    const Subset j = colex_unrank(o, g.n);
    const TropNum& lhs = mu[g.bar(j)];
    const TropNum& rhs = mu[complement(j, g.size())];
    if (lhs == rhs) {
      sink.add_pass();
      return;
    }
    sink.add_failure(Witness{"lagrangian", {j}, {lhs, rhs}, oplus(lhs, rhs), 1});
  });
}

RelationReport isotropy_plucker(const ValuatedMatroid& mu,
                                const CheckOptions& options) {
  const PairedGround g = paired_ground(mu);
  const int k = mu.rank();
  if (k > g.n) {
    throw std::invalid_argument("isotropy_plucker: rank exceeds n");
  }
  if (k < 1) return {};
  const std::size_t outer = binomial(g.size(), k - 1);
  return evaluate_family("isotropy", outer, options,
                         [&](std::size_t o, RelationSink& sink) {
    const Subset s1 = colex_unrank(o, k - 1);
    for_each_subset(g.size(), k - 1, [&](Subset s2) {
      std::vector<TropNum> terms;
      terms.reserve(g.size());
      for (int i = 0; i < g.size(); ++i) {
        const int ib = g.bar(i);
        if (s1.contains(i) || s2.contains(ib)) {
          terms.emplace_back();
        } else {
          terms.push_back(mu[s1.with(i)] + mu[s2.with(ib)]);
        }
      }
      sink.add({s1, s2}, std::move(terms));
    });
  });
}

bool isotropy_oracle(const ValuatedMatroid& mu) {
  return incidence(bar_relabel(mu), dual(mu)).verdict;
}

RelationReport isotropy(const ValuatedMatroid& mu,
                        const CheckOptions& options) {
  if (mu.rank() == paired_ground(mu).n) return lagrangian_isotropy(mu, options);
  return isotropy_plucker(mu, options);
}

ValuatedMatroid bar_relabel(const ValuatedMatroid& mu) {
  const PairedGround g = paired_ground(mu);
  ValuatedMatroid out = ValuatedMatroid::from_function(
      g.size(), mu.rank(), [&](Subset j) { return mu[g.bar(j)]; }, mu.name());
  out.validated_ = mu.validated_;
  return out;
}

ValuatedMatroid extend_with_pair(const ValuatedMatroid& mu, PairKind kind) {
  const PairedGround g = paired_ground(mu);
  const int n = g.n;
  const int fresh = n;              // new unbarred element
  const int fresh_bar = 2 * n + 1;  // its bar
  const std::uint32_t low = (1u << n) - 1u;
  // Old labels: unbarred i stays, barred n + j moves to n + 1 + j.
  auto old_subset = [&](Subset j) {
    return Subset((j.bits() & low) | (((j.bits() >> (n + 1)) & low) << n));
  };
  const int k = mu.rank() + (kind == PairKind::kU12 ? 1 : 0);
  return ValuatedMatroid::from_function(
      2 * n + 2, k,
      [&](Subset j) -> TropNum {
        const int used = j.contains(fresh) + j.contains(fresh_bar);
        if (kind == PairKind::kU02) {
          return used == 0 ? mu[old_subset(j)] : TropNum::inf();
        }
        if (used != 1) return TropNum::inf();
        return mu[old_subset(j.without(fresh).without(fresh_bar))];
      },
      mu.name());
}

TropMatrix extend_presentation(const TropMatrix& ab, PairKind kind) {
  if (ab.cols() % 2 != 0) {
    throw std::invalid_argument("extend_presentation: odd column count");
  }
  const Eigen::Index n = ab.cols() / 2;
  const Eigen::Index rows = ab.rows() + (kind == PairKind::kU12 ? 1 : 0);
  TropMatrix out = TropMatrix::Constant(rows, 2 * n + 2, TropNum::inf());
  out.block(0, 0, ab.rows(), n) = ab.leftCols(n);
  out.block(0, n + 1, ab.rows(), n) = ab.rightCols(n);
  if (kind == PairKind::kU12) {
    out(rows - 1, n) = TropNum(0);
    out(rows - 1, 2 * n + 1) = TropNum(0);
  }
  return out;
}

std::optional<Rank2Normalization> symplectic_rank2_normalize(
    const ValuatedMatroid& mu) {
  const PairedGround g = paired_ground(mu);
  if (mu.rank() != 2) {
    throw std::invalid_argument("symplectic_rank2_normalize: rank must be 2");
  }
  TropNum top;
  int finite = 0;
  for (int i = 0; i < g.n; ++i) {
    const TropNum& d = mu[Subset::of({i, g.bar(i)})];
    if (d.is_inf()) continue;
    ++finite;
    if (top.is_inf() || top < d) top = d;
  }
  if (finite == 1) return std::nullopt;

  std::vector<Rational> shift(g.size(), Rational(0));
  for (int i = 0; i < g.n && finite > 0; ++i) {
    const TropNum& d = mu[Subset::of({i, g.bar(i)})];
    if (d.is_inf()) continue;
    shift[i] = shift[g.bar(i)] = (top.value() - d.value()) / 2;
  }
  ValuatedMatroid shifted = ValuatedMatroid::from_function(
      g.size(), 2,
      [&](Subset j) {
        const auto e = j.elements();
        return mu[j] + TropNum(Rational(shift[e[0]] + shift[e[1]]));
      },
      mu.name());
  return Rank2Normalization{std::move(shifted), std::move(shift)};
}

AdmissibleBasisSystem admissible_bases(const ValuatedMatroid& mu) {
  const PairedGround g = paired_ground(mu);
  AdmissibleBasisSystem sys{g.n, mu.rank(), {}};
  for (Subset b : mu.bases()) {
    if (g.admissible(b)) sys.bases.push_back(b);
  }
  return sys;
}

std::vector<int> basis_point(const AdmissibleBasisSystem& sys, Subset j) {
  std::vector<int> p(sys.n, 0);
  for (int e : j.elements()) {
    if (e < sys.n) {
      p[e] += 1;
    } else {
      p[e - sys.n] -= 1;
    }
  }
  return p;
}

namespace {

// Parallel to a type-C root: a multiple of e_i, or of e_i +- e_j. Edges
// between admissible sets that swap two pairs at once, e.g. 12 -- ~1~2, have
// length 2(e_1 + e_2); isotropic row spaces produce them.
bool root_direction(const std::vector<int>& d) {
  std::vector<int> mags;
  for (int x : d) {
    if (x != 0) mags.push_back(std::abs(x));
  }
  return mags.size() == 1 || (mags.size() == 2 && mags[0] == mags[1]);
}

// [p, q] is an edge iff some w in [-1,1]^n has w.p = w.q > w.r for every other
// point r. With u = w + 1 and t = delta + big the LP lives in x >= 0.
bool is_edge(const std::vector<std::vector<int>>& pts, std::size_t p,
             std::size_t q, int big) {
  const int n = static_cast<int>(pts[p].size());
  LinearProgram lp;
  lp.num_vars = n + 1;
  lp.c.assign(n + 1, Rational(0));
  lp.c[n] = 1;
  auto diff_row = [&](std::size_t a, std::size_t b, bool with_t) {
    std::vector<Rational> row(n + 1, Rational(0));
    Rational rhs = 0;
    for (int j = 0; j < n; ++j) {
      row[j] = pts[a][j] - pts[b][j];
      rhs += row[j];
    }
    if (with_t) row[n] = -1;
    return std::make_pair(std::move(row), rhs);
  };
  for (std::size_t r = 0; r < pts.size(); ++r) {
    if (r == p || r == q) continue;
    for (std::size_t a : {p, q}) {
      auto [row, rhs] = diff_row(a, r, true);
      lp.add(std::move(row), Sense::kGe, rhs - big);
    }
  }
  auto [row, rhs] = diff_row(p, q, false);
  lp.add(std::move(row), Sense::kEq, rhs);
  for (int j = 0; j <= n; ++j) {
    std::vector<Rational> bound(n + 1, Rational(0));
    bound[j] = 1;
    lp.add(std::move(bound), Sense::kLe, j < n ? Rational(2) : Rational(2 * big));
  }
  const LpResult res = solve(lp);
  return res.status == LpStatus::kOptimal && res.value > big;
}

}  // namespace

SymplecticMatroidReport check_symplectic_matroid(
    const AdmissibleBasisSystem& sys) {
  const PairedGround g{sys.n};
  for (Subset b : sys.bases) {
    if (b.size() != sys.k || !g.admissible(b) ||
        !b.is_subset_of(Subset::full(g.size()))) {
      throw std::invalid_argument("check_symplectic_matroid: " + g.label(b) +
                                  " is not an admissible " +
                                  std::to_string(sys.k) + "-set");
    }
  }
  std::vector<std::vector<int>> pts;
  for (Subset b : sys.bases) pts.push_back(basis_point(sys, b));
  // |w.(p - r)| <= 2k, so this offset keeps t = delta + big nonnegative.
  const int big = 2 * sys.k + 1;

  SymplecticMatroidReport report;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    for (std::size_t q = p + 1; q < pts.size(); ++q) {
      if (!is_edge(pts, p, q, big)) continue;
      report.edges.emplace_back(sys.bases[p], sys.bases[q]);
      std::vector<int> d(sys.n);
      for (int j = 0; j < sys.n; ++j) d[j] = pts[q][j] - pts[p][j];
      if (!root_direction(d)) {
        report.verdict = false;
        report.offending.emplace_back(sys.bases[p], sys.bases[q]);
      }
    }
  }
  return report;
}

}  // namespace tropsp
