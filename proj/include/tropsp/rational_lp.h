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

#include <vector>

#include "tropsp/trop_num.h"

namespace tropsp {

enum class Sense { kLe, kGe, kEq };

/// maximize c.x subject to a_i.x (sense_i) b_i, x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<Sense> sense;
  std::vector<Rational> b;
  std::vector<Rational> c;

  void add(std::vector<Rational> row, Sense s, Rational rhs) {
    a.push_back(std::move(row));
    sense.push_back(s);
    b.push_back(std::move(rhs));
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Dense two-phase primal simplex over exact rationals with Bland's rule
/// (terminates on degenerate problems). Intended for tens of variables.
LpResult solve(const LinearProgram& lp);

}  // namespace tropsp
