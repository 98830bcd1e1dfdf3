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

#include "tropsp/subset.h"

#include <array>
#include <stdexcept>

namespace tropsp {

namespace {

constexpr int kTable = 64;

const std::array<std::array<std::uint64_t, kTable>, kTable>& pascal() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kTable>, kTable> t{};
    for (int n = 0; n < kTable; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

}  // namespace

Subset Subset::of(std::initializer_list<int> elements) {
  Subset s;
  for (int e : elements) {
    if (e < 0 || e >= 32) throw std::out_of_range("Subset::of: element");
    s = s.with(e);
  }
  return s;
}

Subset Subset::from_elements(const std::vector<int>& elements) {
  Subset s;
  for (int e : elements) {
    if (e < 0 || e >= 32) {
      throw std::out_of_range("Subset::from_elements: element");
    }
    s = s.with(e);
  }
  return s;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n >= kTable) throw std::out_of_range("binomial: n too large");
  return pascal()[n][k];
}

std::size_t colex_rank(Subset s) {
  std::size_t rank = 0;
  int t = 1;
  for (std::uint32_t b = s.bits(); b != 0; b &= b - 1, ++t) {
    rank += binomial(std::countr_zero(b), t);
  }
  return rank;
}

Subset colex_unrank(std::size_t rank, int k) {
  Subset s;
  for (int t = k; t >= 1; --t) {
    int e = t - 1;
    while (binomial(e + 1, t) <= rank) ++e;
    rank -= binomial(e, t);
    s = s.with(e);
  }
  return s;
}

std::vector<Subset> subsets_of_size(int m, int k) {
  std::vector<Subset> out;
  out.reserve(binomial(m, k));
  for_each_subset(m, k, [&](Subset s) { out.push_back(s); });
  return out;
}

std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(e + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace tropsp
