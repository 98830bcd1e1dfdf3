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

#include "tropsp/valuated_matroid.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tropsp {

namespace {

const TropNum& inf_ref() {
  static const TropNum kInf;
  return kInf;
}

// Inserts a zero bit at position e (inverse of removing element e).
std::uint32_t insert_gap(std::uint32_t x, int e) {
  const std::uint32_t low = (1u << e) - 1u;
  return (x & low) | ((x & ~low) << 1);
}

}  // namespace

ValuatedMatroid::ValuatedMatroid(int m, int k, std::vector<TropNum> values,
                                 std::string name)
    : m_(m), k_(k), values_(std::move(values)), name_(std::move(name)) {
  if (m < 0 || m > kMaxGroundSize) {
    throw std::invalid_argument("ValuatedMatroid: ground size out of range");
  }
  if (k < 0 || k > m) {
    throw std::invalid_argument("ValuatedMatroid: rank out of range");
  }
  if (values_.size() != binomial(m, k)) {
    throw std::invalid_argument("ValuatedMatroid: expected C(m,k) values, got " +
                                std::to_string(values_.size()));
  }
  if (std::none_of(values_.begin(), values_.end(),
                   [](const TropNum& v) { return v.is_finite(); })) {
    throw std::invalid_argument("ValuatedMatroid: all values are INF");
  }
}

ValuatedMatroid ValuatedMatroid::from_function(
    int m, int k, const std::function<TropNum(Subset)>& value,
    std::string name) {
  std::vector<TropNum> values;
  values.reserve(binomial(m, k));
  for_each_subset(m, k, [&](Subset j) { values.push_back(value(j)); });
  return ValuatedMatroid(m, k, std::move(values), std::move(name));
}

ValuatedMatroid ValuatedMatroid::from_bases(int m, int k,
                                            const std::vector<Subset>& bases,
                                            std::string name) {
  std::vector<TropNum> values(binomial(m, k));
  for (Subset b : bases) {
    if (b.size() != k || !b.is_subset_of(Subset::full(m))) {
      throw std::invalid_argument("from_bases: basis " + to_string(b) +
                                  " has the wrong shape");
    }
    values[colex_rank(b)] = TropNum(0);
  }
  return ValuatedMatroid(m, k, std::move(values), std::move(name));
}

ValuatedMatroid ValuatedMatroid::uniform(int k, int m) {
  return ValuatedMatroid(m, k, std::vector<TropNum>(binomial(m, k), TropNum(0)),
                         "U" + std::to_string(k) + "," + std::to_string(m));
}

ValuatedMatroid ValuatedMatroid::renamed(std::string name) const {
  ValuatedMatroid out = *this;
  out.name_ = std::move(name);
  return out;
}

const TropNum& ValuatedMatroid::operator[](Subset j) const {
  if (j.size() != k_ || !j.is_subset_of(Subset::full(m_))) return inf_ref();
  return values_[colex_rank(j)];
}

std::vector<Subset> ValuatedMatroid::bases() const {
  std::vector<Subset> out;
  std::size_t r = 0;
  for_each_subset(m_, k_, [&](Subset j) {
    if (values_[r++].is_finite()) out.push_back(j);
  });
  return out;
}

bool ValuatedMatroid::is_loop(int e) const {
  for (Subset b : bases()) {
    if (b.contains(e)) return false;
  }
  return true;
}

bool ValuatedMatroid::is_coloop(int e) const {
  for (Subset b : bases()) {
    if (!b.contains(e)) return false;
  }
  return true;
}

ValuatedMatroid ValuatedMatroid::canonical() const {
  TropNum lo;
  for (const TropNum& v : values_) lo = oplus(lo, v);
  ValuatedMatroid out = *this;
  for (TropNum& v : out.values_) {
    if (v.is_finite()) v = TropNum(Rational(v.value() - lo.value()));
  }
  return out;
}

bool ValuatedMatroid::equivalent(const ValuatedMatroid& other) const {
  return m_ == other.m_ && k_ == other.k_ &&
         canonical().values_ == other.canonical().values_;
}

RelationReport check_plucker(const ValuatedMatroid& mu,
                             const CheckOptions& options) {
  const int m = mu.ground_size();
  const int k = mu.rank();
  if (k < 1 || k > m - 1) return {};
  const std::size_t outer = binomial(m, k - 1);
  return evaluate_family("plucker", outer, options,
                         [&](std::size_t o, RelationSink& sink) {
    const Subset s = colex_unrank(o, k - 1);
    for_each_subset(m, k + 1, [&](Subset t) {
      std::vector<TropNum> terms;
      for (int i : (t - s).elements()) {
        terms.push_back(mu[t.without(i)] + mu[s.with(i)]);
      }
      sink.add({s, t}, std::move(terms));
    });
  });
}

ValuatedMatroid validate(ValuatedMatroid mu) {
  RelationReport r = check_plucker(mu);
  if (!r.verdict) {
    const Witness& w = r.witnesses.front();
    throw std::invalid_argument("validate: Plücker relation fails at S=" +
                                to_string(w.indices[0]) +
                                " T=" + to_string(w.indices[1]));
  }
  mu.validated_ = true;
  return mu;
}

ValuatedMatroid dual(const ValuatedMatroid& mu) {
  const int m = mu.ground_size();
  ValuatedMatroid out = ValuatedMatroid::from_function(
      m, m - mu.rank(), [&](Subset b) { return mu[complement(b, m)]; },
      mu.name().empty() ? std::string() : mu.name() + "*");
  out.validated_ = mu.validated_;
  return out;
}

ValuatedMatroid direct_sum(const ValuatedMatroid& mu1,
                           const ValuatedMatroid& mu2) {
  const int m1 = mu1.ground_size();
  const int k1 = mu1.rank();
  const int m = m1 + mu2.ground_size();
  if (m > kMaxGroundSize) {
    throw std::invalid_argument("direct_sum: ground set too large");
  }
  const Subset first = Subset::full(m1);
  return ValuatedMatroid::from_function(
      m, k1 + mu2.rank(), [&](Subset j) -> TropNum {
        const Subset j1 = j & first;
        if (j1.size() != k1) return TropNum::inf();
        return mu1[j1] + mu2[Subset((j - first).bits() >> m1)];
      });
}

ValuatedMatroid minor(const ValuatedMatroid& mu, Subset del,
                      Subset contract) {
  if (!(del & contract).empty()) {
    throw std::invalid_argument("minor: delete and contract sets intersect");
  }
  if (!(del | contract).is_subset_of(Subset::full(mu.ground_size()))) {
    throw std::invalid_argument("minor: element outside the ground set");
  }
  ValuatedMatroid cur = mu;
  for (int e = mu.ground_size() - 1; e >= 0; --e) {
    const bool c = contract.contains(e);
    if (!c && !del.contains(e)) continue;
    const int m = cur.ground_size();
    const int k = cur.rank();
    // Contract a non-loop, or delete a coloop: rank drops and e joins J.
    const bool keep_e = c ? !cur.is_loop(e) : cur.is_coloop(e);
    if (keep_e) {
      cur = ValuatedMatroid::from_function(m - 1, k - 1, [&](Subset j) {
        return cur[Subset(insert_gap(j.bits(), e)).with(e)];
      });
    } else {
      cur = ValuatedMatroid::from_function(m - 1, k, [&](Subset j) {
        return cur[Subset(insert_gap(j.bits(), e))];
      });
    }
  }
  return cur.renamed(mu.name());
}

namespace {

// Integer matrix with each row scaled by the lcm of its denominators.
std::vector<std::vector<BigInt>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<BigInt>> rows(m.rows(),
                                        std::vector<BigInt>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  return rows;
}

// Bareiss elimination; returns the rank and leaves the matrix in echelon form.
int bareiss_rank(std::vector<std::vector<BigInt>> a) {
  const int r = static_cast<int>(a.size());
  const int c = r == 0 ? 0 : static_cast<int>(a[0].size());
  BigInt prev = 1;
  int rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = rank;
    while (piv < r && a[piv][col] == 0) ++piv;
    if (piv == r) continue;
    std::swap(a[piv], a[rank]);
    for (int i = rank + 1; i < r; ++i) {
      for (int j = col + 1; j < c; ++j) {
        a[i][j] = (a[i][j] * a[rank][col] - a[rank][j] * a[i][col]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

int rational_rank(const RationalMatrix& m) {
  return bareiss_rank(integer_rows(m));
}

ValuatedMatroid bases_from_rational_matrix(const RationalMatrix& m,
                                           std::string name) {
  const int k = static_cast<int>(m.rows());
  const int n = static_cast<int>(m.cols());
  const auto rows = integer_rows(m);
  if (bareiss_rank(rows) != k) {
    throw std::invalid_argument("bases_from_rational_matrix: matrix has rank " +
                                std::to_string(bareiss_rank(rows)) +
                                " < " + std::to_string(k));
  }
  return ValuatedMatroid::from_function(
      n, k,
      [&](Subset j) {
        std::vector<std::vector<BigInt>> sub(k);
        const auto cols = j.elements();
        for (int i = 0; i < k; ++i) {
          for (int c : cols) sub[i].push_back(rows[i][c]);
        }
        return bareiss_rank(std::move(sub)) == k ? TropNum(0) : TropNum::inf();
      },
      std::move(name));
}

RelationReport point_in_linear_space(const ValuatedMatroid& mu,
                                     const TropPoint& x,
                                     const CheckOptions& options) {
  const int m = mu.ground_size();
  const int k = mu.rank();
  if (x.size() != m) {
    throw std::invalid_argument("point_in_linear_space: point has length " +
                                std::to_string(x.size()) + ", expected " +
                                std::to_string(m));
  }
  if (k + 1 > m) return {};
  return evaluate_family("linear_space", binomial(m, k + 1), options,
                         [&](std::size_t o, RelationSink& sink) {
    const Subset t = colex_unrank(o, k + 1);
    std::vector<TropNum> terms;
    for (int i : t.elements()) terms.push_back(mu[t.without(i)] + x(i));
    sink.add({t}, std::move(terms));
  });
}

RelationReport incidence(const ValuatedMatroid& mu1, const ValuatedMatroid& mu2,
                         const CheckOptions& options) {
  const int m = mu1.ground_size();
  if (mu2.ground_size() != m) {
    throw std::invalid_argument("incidence: ground sets differ");
  }
  const int k1 = mu1.rank();
  const int k2 = mu2.rank();
  if (k1 > k2) throw std::invalid_argument("incidence: rank(mu1) > rank(mu2)");
  if (k1 < 1 || k2 + 1 > m) return {};
  return evaluate_family("incidence", binomial(m, k1 - 1), options,
                         [&](std::size_t o, RelationSink& sink) {
    const Subset s = colex_unrank(o, k1 - 1);
    for_each_subset(m, k2 + 1, [&](Subset t) {
      std::vector<TropNum> terms;
      for (int i : (t - s).elements()) {
        terms.push_back(mu1[s.with(i)] + mu2[t.without(i)]);
      }
      sink.add({s, t}, std::move(terms));
    });
  });
}

MinTwice trop_poly_min_twice(const ValuatedMatroid& mu,
                             const std::vector<PluckerMonomial>& monomials) {
  std::vector<TropNum> terms;
  terms.reserve(monomials.size());
  for (const PluckerMonomial& mono : monomials) {
    TropNum sum(0);
    for (Subset j : mono) {
      if (j.size() != mu.rank()) {
        throw std::invalid_argument("trop_poly_min_twice: variable " +
                                    to_string(j) + " has the wrong size");
      }
      sum += mu[j];
    }
    terms.push_back(std::move(sum));
  }
  return min_achieved_twice(terms);
}

}  // namespace tropsp
