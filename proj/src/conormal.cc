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

#include "tropsp/conormal.h"

#include <algorithm>
#include <stdexcept>

#include "tropsp/symplectic.h"

namespace tropsp {

ValuatedMatroid conormal(const ValuatedMatroid& mu) {
  ValuatedMatroid out = direct_sum(mu, dual(mu));
  return out.renamed(mu.name().empty() ? "" : "conormal(" + mu.name() + ")");
}

bool single_basis(const ValuatedMatroid& mu) {
  return std::count_if(mu.values().begin(), mu.values().end(),
                       [](const TropNum& v) { return v.is_finite(); }) == 1;
}

Presentation conormal_block_presentation(const TropMatrix& pa,
                                         const TropMatrix& pb) {
  if (pa.cols() != pb.cols()) {
    throw std::invalid_argument("conormal_block_presentation: column mismatch");
  }
  const ValuatedMatroid mu = stiefel(pa);
  const ValuatedMatroid mu_dual = stiefel(pb);
  if (!mu_dual.equivalent(dual(mu))) {
    throw std::invalid_argument(
        "conormal_block_presentation: second block does not present the dual");
  }
  const Eigen::Index n = pa.cols();
  TropMatrix block =
      TropMatrix::Constant(pa.rows() + pb.rows(), 2 * n, TropNum::inf());
  block.topLeftCorner(pa.rows(), n) = pa;
  block.bottomRightCorner(pb.rows(), n) = pb;
  return Presentation(std::move(block));
}

ConormalReport conormal_report(const ValuatedMatroid& mu,
                               const std::optional<TropMatrix>& pa,
                               const std::optional<TropMatrix>& pb,
                               const CheckOptions& options) {
  const ValuatedMatroid c = conormal(mu);
  ConormalReport r;
  r.plucker = check_plucker(c, options).verdict;
  r.symplectic = check_symplectic_relations(c, options);
  r.lagrangian = lagrangian_isotropy(c, options);
  r.single_basis = single_basis(mu);
  if (pa && pb) {
    if (!stiefel(*pa).equivalent(mu)) {
      throw std::invalid_argument(
          "conormal_report: presentation does not present the matroid");
    }
    r.block_symmetric =
        symmetric_presentation(conormal_block_presentation(*pa, *pb)).verdict;
  }
  return r;
}

}  // namespace tropsp
