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
#include <string>
#include <utility>
#include <vector>

#include "tropsp/relation.h"
#include "tropsp/subset.h"
#include "tropsp/trop_matrix.h"
#include "tropsp/valuated_matroid.h"

namespace tropsp {

// Paired ground set [2n] = {1..n, 1bar..nbar}: element i < n is unbarred,
// element n + i is its bar. Ordered 1 < ... < n < 1bar < ... < nbar.
struct PairedGround {
  int n = 0;

  int size() const { return 2 * n; }
  int bar(int i) const { return i < n ? i + n : i - n; }
  Subset bar(Subset s) const {
    const std::uint32_t low = (1u << n) - 1u;
    return Subset(((s.bits() & low) << n) | ((s.bits() >> n) & low));
  }
  bool admissible(Subset s) const { return (s & bar(s)).empty(); }
  /// "3" or "~3" (barred).
  std::string label(int i) const;
  std::string label(Subset s) const;
};

/// Ground set of a matroid declared as paired; throws if m is odd.
PairedGround paired_ground(const ValuatedMatroid& mu);

/// For every S in C([2n], k-2): the minimum over pairs i with i, ibar not in
/// S of mu(S + i + ibar) is attained twice. Witness indices {S}.
RelationReport check_symplectic_relations(const ValuatedMatroid& mu,
                                          const CheckOptions& options = {});

/// Symplectic Dressian membership: Plücker and symplectic relations.
bool in_symplectic_dressian(const ValuatedMatroid& mu,
                            const CheckOptions& options = {});

/// min over i in [2n] of x_i + y_ibar attained twice. Throws on length
/// mismatch or odd length.
RelationReport orthogonal(const TropPoint& x, const TropPoint& y);

/// k = n only: mu(bar J) == mu([2n] - J) for every n-subset J (INF == INF).
/// Witness indices {J}, terms {mu(bar J), mu([2n] - J)}.
RelationReport lagrangian_isotropy(const ValuatedMatroid& mu,
                                   const CheckOptions& options = {});

/// Any k <= n: for all S1, S2 in C([2n], k-1) the minimum over i of
/// mu(S1 + i) + mu(S2 + ibar) is attained twice. Witness indices {S1, S2}.
RelationReport isotropy_plucker(const ValuatedMatroid& mu,
                                const CheckOptions& options = {});

/// Reference criterion: L_{bar mu} contained in L_{mu*}.
bool isotropy_oracle(const ValuatedMatroid& mu);

/// Lagrangian criterion when k = n, Plücker-coordinate criterion otherwise.
RelationReport isotropy(const ValuatedMatroid& mu,
                        const CheckOptions& options = {});

/// mu(J) := mu(bar J).
ValuatedMatroid bar_relabel(const ValuatedMatroid& mu);

enum class PairKind { kU02, kU12 };

/// mu + U_{0,2} or mu + U_{1,2} with the new pair inserted as element n+1 and
/// its bar, so the result lives on the paired ground set of size 2n + 2.
ValuatedMatroid extend_with_pair(const ValuatedMatroid& mu, PairKind kind);

/// Same extension applied to a k x 2n presentation (A|B): INF columns for
/// U02; for U12 additionally a row that is 0 on the new pair and INF elsewhere.
TropMatrix extend_presentation(const TropMatrix& ab, PairKind kind);

struct Rank2Normalization {
  ValuatedMatroid mu;
  /// c_j for every element; the result is mu_ab + c_a + c_b.
  std::vector<Rational> shift;
};

/// Lineality shift making every finite mu(i, ibar) equal to the largest one.
/// nullopt when exactly one mu(i, ibar) is finite. Throws if k != 2.
std::optional<Rank2Normalization> symplectic_rank2_normalize(
    const ValuatedMatroid& mu);

struct AdmissibleBasisSystem {
  int n = 0;
  int k = 0;
  std::vector<Subset> bases;
};

/// Admissible k-subsets in the support of mu (finite values).
AdmissibleBasisSystem admissible_bases(const ValuatedMatroid& mu);

/// e_J in Z^n with e_i = +1 coordinate i, e_ibar = -1 coordinate i.
std::vector<int> basis_point(const AdmissibleBasisSystem& sys, Subset j);

struct SymplecticMatroidReport {
  bool verdict = true;
  std::vector<std::pair<Subset, Subset>> edges;
  std::vector<std::pair<Subset, Subset>> offending;
};

/// Computes the edges of conv{e_J} with an exact LP per pair and checks every
/// edge is parallel to e_i - e_j, e_i + e_j or e_i.
SymplecticMatroidReport check_symplectic_matroid(
    const AdmissibleBasisSystem& sys);

}  // namespace tropsp
