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
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "tropsp/relation.h"
#include "tropsp/symplectic.h"
#include "tropsp/trop_matrix.h"
#include "tropsp/valuated_matroid.h"

namespace tropsp {

/// Input error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Matroid files are JSON objects:
//
//   {
//     "name": "cube",            optional
//     "ground": 8,
//     "paired": true,            optional, default false; needs even ground
//     "rank": 4,
//     "values": ["0", "inf", ...]              dense, colex order of k-subsets
//   }
//
// or, instead of "values", "entries": [{"subset": [1, 2], "value": "-3"}, ...]
// with 1-based elements (n + i is the bar of i) and INF for unlisted subsets.
// Values are strings in the TropNum grammar or JSON integers. Unknown keys
// are rejected.
struct MatroidFile {
  ValuatedMatroid mu;
  bool paired = false;
};

MatroidFile parse_matroid(std::string_view text);

/// Canonical form: dense string values, two-space indentation, trailing
/// newline. parse_matroid(serialize_matroid(f)) reproduces f exactly.
std::string serialize_matroid(const ValuatedMatroid& mu, bool paired);
nlohmann::ordered_json matroid_json(const ValuatedMatroid& mu, bool paired);

// Matrix files: one row per line, whitespace-separated values, '#' starts a
// comment, blank lines are ignored. An optional '|' in every row splits
// (A|B); it must sit in the middle.
struct MatrixFile {
  TropMatrix matrix;
  bool split = false;
};

MatrixFile parse_matrix(std::string_view text);
std::string serialize_matrix(const TropMatrix& m, bool split = false);

// Admissible basis lists: {"n": 3, "rank": 2, "bases": [[1, 5], ...]} or
// "non_bases" (complement within the admissible rank-sets).
AdmissibleBasisSystem parse_basis_system(std::string_view text);

nlohmann::ordered_json report_json(const RelationReport& r, int paired_n);

std::string read_file(const std::string& path);

}  // namespace tropsp
