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
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tropsp/subset.h"
#include "tropsp/trop_num.h"
#include "tropsp/valuated_matroid.h"

namespace tropsp {

// Unrooted tree with leaves 0..m-1 (printed 1..m) and internal vertices
// m, m+1, ...; every internal vertex has degree 3 once built.
class PhyloTree {
 public:
  struct Edge {
    int u;
    int v;
    Rational length;
  };

  PhyloTree() = default;
  PhyloTree(int leaves, std::vector<Edge> edges);

  // Three leaves around one internal vertex, unit lengths.
  static PhyloTree tripod();

  int leaves() const { return leaves_; }
  int vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // New leaf attached by subdividing edge e; lengths of the three new pieces
  // are 1.
  PhyloTree insert_leaf(std::size_t e) const;
  PhyloTree with_lengths(std::vector<Rational> lengths) const;

  // Nontrivial splits, each stored as the side not containing leaf 0; sorted.
  std::vector<Subset> splits() const;

  // Path-length metric between leaves.
  std::vector<std::vector<Rational>> distances() const;

 private:
  std::vector<std::vector<std::pair<int, int>>> adjacency() const;

  int leaves_ = 0;
  int vertices_ = 0;
  std::vector<Edge> edges_;
};

// (2m-5)!! trivalent topologies by sequential leaf insertion, unit lengths.
void for_each_topology(int m, const std::function<void(const PhyloTree&)>& f);
std::vector<PhyloTree> enumerate_topologies(int m);

BigInt double_factorial(int n);
// (2m-5)!!
BigInt topology_count(int m);
// 2^(m-1) - m - 1.
BigInt count_splits(int m);

// mu_ij = -d(i, j), a rank-2 valuated matroid on the leaves.
ValuatedMatroid tree_to_plucker(const PhyloTree& t);

struct RayFacetCounts {
  BigInt rays;
  BigInt facets;
};
// Rays 2^(2n-1) - n - 1 and facets C(n,2) (4n-5)!! of the rank-2 fan.
RayFacetCounts tspgr2_counts(int n);

// Nonzero Betti numbers by degree.
std::map<int, BigInt> betti_numbers(int n);

// Random lengths p/q with 0 <= p <= 12, 1 <= q <= 4.
PhyloTree random_lengths(const PhyloTree& t, std::mt19937_64& rng);
// Uniform random topology by random leaf insertion, then random lengths.
PhyloTree random_tree(int m, std::mt19937_64& rng);

// Newick text rooted at the internal neighbour of leaf 1.
std::string to_newick(const PhyloTree& t);
// Accepts leaf labels 1..m, optional ":length" with the value grammar of
// TropNum (finite, nonnegative), a trivalent or bifurcating root. Throws
// std::invalid_argument with a character offset on malformed input.
PhyloTree parse_newick(std::string_view text);

}  // namespace tropsp
