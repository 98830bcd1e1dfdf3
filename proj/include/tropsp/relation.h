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

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "tropsp/subset.h"
#include "tropsp/trop_num.h"

namespace tropsp {

/// One failing relation: which family, its index data (e.g. S and T), the
/// offending term list, and the min-twice summary of those terms.
struct Witness {
  std::string relation;
  std::vector<Subset> indices;
  std::vector<TropNum> terms;
  TropNum min;
  std::size_t multiplicity = 0;
};

/// Outcome of checking a whole relation family. Witnesses are listed in
/// enumeration order of the family's index data, so the first one is the
/// least failing index tuple regardless of how many jobs evaluated it.
struct RelationReport {
  bool verdict = true;
  std::vector<Witness> witnesses;
  bool truncated = false;
  std::size_t relations_checked = 0;
  std::size_t failures = 0;
};

struct CheckOptions {
  /// Witnesses kept in the report; failures are always counted in full.
  std::size_t max_witnesses = 1;
  unsigned jobs = 1;
};

inline CheckOptions all_witnesses(unsigned jobs = 1) {
  return {std::numeric_limits<std::size_t>::max(), jobs};
}

/// Accumulates the relations of one slice of a family.
class RelationSink {
 public:
  RelationSink(std::string relation, std::size_t max_witnesses)
      : relation_(std::move(relation)), max_witnesses_(max_witnesses) {}

  /// Records one relation; returns its verdict.
  bool add(std::vector<Subset> indices, std::vector<TropNum> terms) {
    ++report_.relations_checked;
    MinTwice mt = min_achieved_twice(terms);
    if (mt.verdict) return true;
    report_.verdict = false;
    ++report_.failures;
    if (report_.witnesses.size() < max_witnesses_) {
      report_.witnesses.push_back(Witness{relation_, std::move(indices),
                                          std::move(terms), mt.min,
                                          mt.multiplicity});
    } else {
      report_.truncated = true;
    }
    return false;
  }

  /// Records an already-decided relation (used by equality-style families).
  void add_failure(Witness w) {
    ++report_.relations_checked;
    report_.verdict = false;
    ++report_.failures;
    if (report_.witnesses.size() < max_witnesses_) {
      report_.witnesses.push_back(std::move(w));
    } else {
      report_.truncated = true;
    }
  }
  void add_pass() { ++report_.relations_checked; }

  RelationReport take() { return std::move(report_); }

 private:
  std::string relation_;
  std::size_t max_witnesses_;
  RelationReport report_;
};

/// Evaluates `body(outer_index, sink)` for outer_index in [0, outer_count).
/// Slices are contiguous and merged in order, so the report is identical for
/// every job count.
template <class Body>
RelationReport evaluate_family(const std::string& relation,
                               std::size_t outer_count,
                               const CheckOptions& options, Body&& body) {
  const unsigned jobs = std::max<unsigned>(
      1, std::min<std::size_t>(options.jobs, std::max<std::size_t>(1, outer_count)));
  std::vector<RelationReport> parts(jobs);
  auto run_slice = [&](unsigned slice) {
    const std::size_t begin = outer_count * slice / jobs;
    const std::size_t end = outer_count * (slice + 1) / jobs;
    RelationSink sink(relation, options.max_witnesses);
    for (std::size_t o = begin; o < end; ++o) body(o, sink);
    parts[slice] = sink.take();
  };
  if (jobs == 1) {
    run_slice(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned s = 0; s < jobs; ++s) workers.emplace_back(run_slice, s);
  }

  RelationReport out;
  for (RelationReport& part : parts) {
    out.relations_checked += part.relations_checked;
    out.failures += part.failures;
    out.verdict = out.verdict && part.verdict;
    out.truncated = out.truncated || part.truncated;
    for (Witness& w : part.witnesses) {
      if (out.witnesses.size() < options.max_witnesses) {
        out.witnesses.push_back(std::move(w));
      } else {
        out.truncated = true;
      }
    }
  }
  return out;
}

}  // namespace tropsp
