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

#include <functional>
#include <string>
#include <vector>

#include "tropsp/relation.h"
#include "tropsp/subset.h"
#include "tropsp/trop_matrix.h"
#include "tropsp/trop_num.h"

namespace tropsp {

/// A rank-k tropical Plücker vector on the ground set {0..m-1}, stored densely
/// by colex rank of the k-subsets. INF is an explicit value.
///
/// Values are projective: two vectors that differ by a global finite constant
/// describe the same valuated matroid (see canonical() and equivalent()).
/// Instances are immutable after construction.
class ValuatedMatroid {
 public:
  /// Throws std::invalid_argument when the size is not C(m, k) or every value
  /// is INF.
  ValuatedMatroid(int m, int k, std::vector<TropNum> values,
                  std::string name = {});

  static ValuatedMatroid from_function(
      int m, int k, const std::function<TropNum(Subset)>& value,
      std::string name = {});
  /// 0 on the given bases, INF elsewhere.
  static ValuatedMatroid from_bases(int m, int k,
                                    const std::vector<Subset>& bases,
                                    std::string name = {});
  /// All k-subsets with value 0.
  static ValuatedMatroid uniform(int k, int m);

  int ground_size() const { return m_; }
  int rank() const { return k_; }
  const std::string& name() const { return name_; }
  ValuatedMatroid renamed(std::string name) const;

  /// Value at J; INF whenever |J| != k (a repeated index never reaches here:
  /// callers represent J as a set).
  const TropNum& operator[](Subset j) const;
  const std::vector<TropNum>& values() const { return values_; }

  /// Subsets with finite value, in colex order.
  std::vector<Subset> bases() const;
  bool is_loop(int e) const;
  bool is_coloop(int e) const;

  /// Set by validate(); preserved by the index bijections (dual, relabels).
  bool validated() const { return validated_; }

  /// Shifts all finite values so that the minimum finite value is 0.
  ValuatedMatroid canonical() const;
  /// Projective equality: same ranks and canonical forms agree.
  bool equivalent(const ValuatedMatroid& other) const;

  friend bool operator==(const ValuatedMatroid& a, const ValuatedMatroid& b) {
    return a.m_ == b.m_ && a.k_ == b.k_ && a.values_ == b.values_;
  }

 private:
  friend ValuatedMatroid validate(ValuatedMatroid mu);
  friend ValuatedMatroid dual(const ValuatedMatroid& mu);
  friend ValuatedMatroid bar_relabel(const ValuatedMatroid& mu);

  int m_ = 0;
  int k_ = 0;
  std::vector<TropNum> values_;
  std::string name_;
  bool validated_ = false;
};

/// Tropical Plücker relations: for all S in C(m, k-1), T in C(m, k+1), the
/// minimum of mu(T - i) + mu(S + i) over i in T - S is attained twice.
/// Witness indices are {S, T}.
RelationReport check_plucker(const ValuatedMatroid& mu,
                             const CheckOptions& options = {});

/// Returns mu with the validated flag set; throws std::invalid_argument if the
/// Plücker relations fail.
ValuatedMatroid validate(ValuatedMatroid mu);

/// mu*(B) = mu([m] - B).
ValuatedMatroid dual(const ValuatedMatroid& mu);

/// (mu1 + mu2)(J1 u J2) = mu1(J1) + mu2(J2); the first block occupies
/// elements 0..m1-1. INF whenever |J n block1| != k1.
ValuatedMatroid direct_sum(const ValuatedMatroid& mu1,
                           const ValuatedMatroid& mu2);

/// Standard valuated minor mu / contract \ del. Contracting a loop deletes it
/// and deleting a coloop contracts it, so ranks drop as for ordinary
/// matroids. The remaining elements are relabeled in increasing order.
/// Throws std::invalid_argument if the two sets intersect.
ValuatedMatroid minor(const ValuatedMatroid& mu, Subset del, Subset contract);

/// 0/INF matroid of a k x m rational matrix of rank k: J is a basis iff the
/// maximal minor on columns J is nonzero (exact fraction-free elimination).
/// Throws std::invalid_argument for rank-deficient input.
ValuatedMatroid bases_from_rational_matrix(const RationalMatrix& m,
                                           std::string name = {});

/// Exact rank of a rational matrix (used by the realization oracle and tests).
int rational_rank(const RationalMatrix& m);

/// x lies in L_mu iff for every T in C(m, k+1) the minimum of
/// mu(T - i) + x(i), i in T, is attained twice or is INF. Witness indices {T}.
RelationReport point_in_linear_space(const ValuatedMatroid& mu,
                                     const TropPoint& x,
                                     const CheckOptions& options = {});

/// L_mu1 contained in L_mu2 (rank mu1 <= rank mu2): for all S in C(m, k1-1),
/// T in C(m, k2+1), the minimum of mu1(S + i) + mu2(T - i) over i in T - S is
/// attained twice. Witness indices {S, T}. Throws on ground-size mismatch or
/// k1 > k2.
RelationReport incidence(const ValuatedMatroid& mu1, const ValuatedMatroid& mu2,
                         const CheckOptions& options = {});

/// A monomial in Plücker variables: a multiset of k-subsets.
using PluckerMonomial = std::vector<Subset>;

/// Tropicalized polynomial with nonzero coefficients evaluated at mu: each
/// monomial contributes the sum of its values.
MinTwice trop_poly_min_twice(const ValuatedMatroid& mu,
                             const std::vector<PluckerMonomial>& monomials);

}  // namespace tropsp
