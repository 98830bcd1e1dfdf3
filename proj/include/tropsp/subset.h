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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tropsp {

/// Largest ground set supported by the 32-bit subset representation. Dense
/// value storage makes anything past ~20 impractical anyway.
inline constexpr int kMaxGroundSize = 30;

/// A subset of the ground set {0, ..., m-1} stored as a bitmask. Numeric order
/// on the mask is colexicographic order.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static Subset of(std::initializer_list<int> elements);
  static Subset from_elements(const std::vector<int>& elements);
  static constexpr Subset full(int m) {
    return Subset(m >= 32 ? ~0u : ((1u << m) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr Subset with(int e) const { return Subset(bits_ | (1u << e)); }
  constexpr Subset without(int e) const { return Subset(bits_ & ~(1u << e)); }
  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  /// Elements in increasing order.
  std::vector<int> elements() const;

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  std::uint32_t bits_ = 0;
};

inline Subset complement(Subset s, int m) { return Subset::full(m) - s; }

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n. Exact for n <= 62.
std::uint64_t binomial(int n, int k);

/// Position of a k-subset in the colexicographic order of all k-subsets:
/// rank({e_0 < ... < e_{k-1}}) = sum_t C(e_t, t + 1). Independent of m.
std::size_t colex_rank(Subset s);

/// Inverse of colex_rank for k-subsets.
Subset colex_unrank(std::size_t rank, int k);

/// Next subset of the same cardinality in colex order (Gosper's hack).
constexpr Subset next_same_size(Subset s) {
  const std::uint32_t x = s.bits();
  const std::uint32_t c = x & (~x + 1u);
  const std::uint32_t r = x + c;
  return Subset((((r ^ x) >> 2) / c) | r);
}

/// Calls f(Subset) for every k-subset of {0..m-1} in colex order.
template <class F>
void for_each_subset(int m, int k, F&& f) {
  if (k < 0 || k > m) return;
  if (k == 0) {
    f(Subset());
    return;
  }
  const std::uint64_t count = binomial(m, k);
  Subset s = Subset::full(k);
  for (std::uint64_t i = 0; i < count; ++i) {
    f(s);
    if (i + 1 < count) s = next_same_size(s);
  }
}

std::vector<Subset> subsets_of_size(int m, int k);

/// 1-based element list, e.g. "{1,3,4}".
std::string to_string(Subset s);

}  // namespace tropsp
