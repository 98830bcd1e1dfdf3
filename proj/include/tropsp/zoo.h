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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropsp/relation.h"
#include "tropsp/symplectic.h"
#include "tropsp/trop_matrix.h"
#include "tropsp/valuated_matroid.h"

namespace tropsp {

/// A predicate value plus, for failures of a relation family, a readable
/// description of the least failing relation.
struct Verdict {
  bool value = false;
  std::string witness;
};

struct ZooEntry {
  std::string name;
  std::string note;  // how the matroid was built
  ValuatedMatroid mu;
  bool paired = true;
  std::optional<TropMatrix> presentation;
  /// Expected value for every predicate the entry evaluates.
  std::map<std::string, bool> expected;
  /// Entry-specific predicates beyond the standard ones.
  std::function<std::map<std::string, Verdict>()> extra;
};

/// Monomials of the degree-2 relation on M_K4 that is not implied by the
/// symplectic and Plücker relations; the last one attains the minimum alone.
std::vector<PluckerMonomial> mk4_quadric();

/// Named zoo matroids (also used by tests and the CLI).
ValuatedMatroid zoo_mk4();
ValuatedMatroid zoo_four_points();
ValuatedMatroid zoo_cube();
TropMatrix zoo_d_matrix();
TropMatrix zoo_e_matrix();
TropMatrix zoo_two_lines_presentation();
ValuatedMatroid zoo_two_lines();
TropMatrix zoo_g_presentation();
ValuatedMatroid zoo_g();
ValuatedMatroid zoo_non_pappus();
inline constexpr int kNonPappusX = 8;
AdmissibleBasisSystem zoo_sympmat_system();
ValuatedMatroid zoo_sympmat_completion();

std::vector<ZooEntry> build_corpus();

/// Standard predicates: plucker for every entry; spdr, symplectic and
/// isotropic for paired entries; row_orthogonal and symmetric when a
/// presentation is attached.
std::map<std::string, Verdict> standard_predicates(
    const ValuatedMatroid& mu, bool paired,
    const std::optional<TropMatrix>& presentation,
    const CheckOptions& options = {});

struct ZooRow {
  std::string entry;
  std::string predicate;
  bool computed = false;
  std::optional<bool> expected;
  std::string witness;
  bool diff() const { return !expected || *expected != computed; }
};

struct ZooCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct ZooReport {
  std::vector<ZooRow> rows;
  std::vector<ZooCheck> implications;
  std::vector<ZooCheck> stability;
  std::size_t diffs = 0;
  double seconds = 0;
};

/// Stability of one entry under adding a pair: every standard
/// predicate is unchanged by U02 and U12 extensions (direct sums with U_{0,2}
/// and U_{1,2} for unpaired entries).
std::vector<ZooCheck> extension_stability(const ZooEntry& e,
                                          const CheckOptions& options = {});

ZooReport run_zoo(const CheckOptions& options = {});

}  // namespace tropsp
