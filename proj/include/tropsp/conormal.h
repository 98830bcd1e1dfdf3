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

#include "tropsp/relation.h"
#include "tropsp/stiefel.h"
#include "tropsp/valuated_matroid.h"

namespace tropsp {

// mu + mu* on the paired ground set of size 2n: element i of mu sits at slot
// i, element i of mu* at slot n + i (its bar).
ValuatedMatroid conormal(const ValuatedMatroid& mu);

// Exactly one finite value.
bool single_basis(const ValuatedMatroid& mu);

// (PA INF; INF PB). Throws std::invalid_argument unless pi(PB) is
// projectively equal to dual(pi(PA)).
Presentation conormal_block_presentation(const TropMatrix& pa,
                                         const TropMatrix& pb);

struct ConormalReport {
  bool plucker = true;
  RelationReport symplectic;
  RelationReport lagrangian;
  bool single_basis = false;
  std::optional<bool> block_symmetric;

  bool spdr() const { return plucker && symplectic.verdict; }
};

ConormalReport conormal_report(const ValuatedMatroid& mu,
                               const std::optional<TropMatrix>& pa = {},
                               const std::optional<TropMatrix>& pb = {},
                               const CheckOptions& options = {});

}  // namespace tropsp
