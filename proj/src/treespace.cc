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

#include "tropsp/treespace.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace tropsp {

PhyloTree::PhyloTree(int leaves, std::vector<Edge> edges)
    : leaves_(leaves), edges_(std::move(edges)) {
  if (leaves < 3 || leaves > kMaxGroundSize) {
    throw std::invalid_argument("PhyloTree: need 3 to 30 leaves");
  }
  vertices_ = 0;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u == e.v) {
      throw std::invalid_argument("PhyloTree: bad edge");
    }
    if (e.length < 0) throw std::invalid_argument("PhyloTree: negative length");
    vertices_ = std::max({vertices_, e.u + 1, e.v + 1});
  }
  if (vertices_ != 2 * leaves - 2 ||
      static_cast<int>(edges_.size()) != vertices_ - 1) {
    throw std::invalid_argument("PhyloTree: not a trivalent tree on " +
                                std::to_string(leaves) + " leaves");
  }
  const auto adj = adjacency();
  for (int v = 0; v < vertices_; ++v) {
    const std::size_t want = v < leaves_ ? 1 : 3;
    if (adj[v].size() != want) {
      throw std::invalid_argument("PhyloTree: vertex " + std::to_string(v) +
                                  " has degree " +
                                  std::to_string(adj[v].size()));
    }
  }
  // Degrees plus edge count make it a forest of the right size; check
  // connectivity from leaf 0.
  std::vector<char> seen(vertices_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertices_) {
    throw std::invalid_argument("PhyloTree: graph is disconnected");
  }
}

PhyloTree PhyloTree::tripod() {
  return PhyloTree(3, {{0, 3, 1}, {1, 3, 1}, {2, 3, 1}});
}

std::vector<std::vector<std::pair<int, int>>> PhyloTree::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(vertices_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adj[edges_[i].u].emplace_back(edges_[i].v, static_cast<int>(i));
    adj[edges_[i].v].emplace_back(edges_[i].u, static_cast<int>(i));
  }
  return adj;
}

PhyloTree PhyloTree::insert_leaf(std::size_t e) const {
  const int leaf = leaves_;
  auto shift = [&](int v) { return v < leaves_ ? v : v + 1; };
  const int w = vertices_ + 1;
  std::vector<Edge> out;
  out.reserve(edges_.size() + 2);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& ed = edges_[i];
    if (i == e) {
      out.push_back({shift(ed.u), w, 1});
      out.push_back({w, shift(ed.v), 1});
    } else {
      out.push_back({shift(ed.u), shift(ed.v), ed.length});
    }
  }
  out.push_back({leaf, w, 1});
  return PhyloTree(leaves_ + 1, std::move(out));
}

PhyloTree PhyloTree::with_lengths(std::vector<Rational> lengths) const {
  if (lengths.size() != edges_.size()) {
    throw std::invalid_argument("with_lengths: one length per edge expected");
  }
  std::vector<Edge> out = edges_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i].length = lengths[i];
  return PhyloTree(leaves_, std::move(out));
}

std::vector<Subset> PhyloTree::splits() const {
  const auto adj = adjacency();
  std::vector<int> parent(vertices_, -1), order;
  std::vector<int> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto [w, e] : adj[v]) {
      if (parent[w] < 0) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<Subset> below(vertices_);
  std::vector<Subset> out;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (v < leaves_ && v != 0) below[v] = below[v].with(v);
    if (v == 0) continue;
    const int s = below[v].size();
    if (s >= 2 && s <= leaves_ - 2) out.push_back(below[v]);
    below[parent[v]] = below[parent[v]] | below[v];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Rational>> PhyloTree::distances() const {
  const auto adj = adjacency();
  std::vector<std::vector<Rational>> d(leaves_,
                                       std::vector<Rational>(leaves_));
  for (int s = 0; s < leaves_; ++s) {
    std::vector<Rational> dist(vertices_);
    std::vector<char> seen(vertices_, 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (auto [w, e] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = 1;
        dist[w] = dist[v] + edges_[e].length;
        stack.push_back(w);
      }
    }
    for (int t = 0; t < leaves_; ++t) d[s][t] = dist[t];
  }
  return d;
}

void for_each_topology(int m, const std::function<void(const PhyloTree&)>& f) {
  if (m < 3) throw std::invalid_argument("for_each_topology: need m >= 3");
  std::function<void(const PhyloTree&)> grow = [&](const PhyloTree& t) {
    if (t.leaves() == m) {
      f(t);
      return;
    }
    for (std::size_t e = 0; e < t.edges().size(); ++e) grow(t.insert_leaf(e));
  };
  grow(PhyloTree::tripod());
}

std::vector<PhyloTree> enumerate_topologies(int m) {
  std::vector<PhyloTree> out;
  for_each_topology(m, [&](const PhyloTree& t) { out.push_back(t); });
  return out;
}

BigInt double_factorial(int n) {
  BigInt out = 1;
  for (int i = n; i > 1; i -= 2) out *= i;
  return out;
}

BigInt topology_count(int m) { return double_factorial(2 * m - 5); }

BigInt count_splits(int m) {
  BigInt p = 1;
  p <<= (m - 1);
  return p - m - 1;
}

ValuatedMatroid tree_to_plucker(const PhyloTree& t) {
  const auto d = t.distances();
  return ValuatedMatroid::from_function(
      t.leaves(), 2,
      [&](Subset j) {
        const auto e = j.elements();
        return TropNum(Rational(-d[e[0]][e[1]]));
      },
      "tree");
}

RayFacetCounts tspgr2_counts(int n) {
  if (n < 2) throw std::invalid_argument("tspgr2_counts: need n >= 2");
  BigInt rays = 1;
  rays <<= (2 * n - 1);
  rays -= n + 1;
  const BigInt pairs = BigInt(n) * (n - 1) / 2;
  return {rays, pairs * double_factorial(4 * n - 5)};
}

std::map<int, BigInt> betti_numbers(int n) {
  if (n < 2) throw std::invalid_argument("betti_numbers: need n >= 2");
  if (n == 2) return {{0, 3}};
  BigInt fact = 1;
  for (int i = 2; i <= 2 * n - 2; ++i) fact *= i;
  // At n = 3 the four degrees collide pairwise (0, 0, 2, 2) and add up.
  std::map<int, BigInt> b;
  b[0] += 1;
  b[n - 3] += n - 1;
  b[2 * n - 4] += fact;
  b[3 * n - 7] += BigInt(n - 1) * fact;
  return b;
}

PhyloTree random_lengths(const PhyloTree& t, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(0, 12), den(1, 4);
  std::vector<Rational> lengths;
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    lengths.push_back(x);
  }
  return t.with_lengths(std::move(lengths));
}

PhyloTree random_tree(int m, std::mt19937_64& rng) {
  PhyloTree t = PhyloTree::tripod();
  while (t.leaves() < m) {
    std::uniform_int_distribution<std::size_t> pick(0, t.edges().size() - 1);
    t = t.insert_leaf(pick(rng));
  }
  return random_lengths(t, rng);
}

namespace {

struct NewickWriter {
  const PhyloTree& t;
  std::vector<std::vector<std::pair<int, int>>> adj;

  int min_leaf(int v, int from) const {
    if (v < t.leaves()) return v;
    int best = t.leaves();
    for (auto [w, e] : adj[v]) {
      if (w != from) best = std::min(best, min_leaf(w, v));
    }
    return best;
  }

  std::string write(int v, int from) const {
    if (v < t.leaves()) return std::to_string(v + 1);
    std::vector<std::pair<int, std::string>> parts;
    for (auto [w, e] : adj[v]) {
      if (w == from) continue;
      parts.emplace_back(min_leaf(w, v), write(w, v) + ":" +
                                             TropNum(t.edges()[e].length).str());
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ",";
      out += parts[i].second;
    }
    return out + ")";
  }
};

class NewickParser {
 public:
  explicit NewickParser(std::string_view s) : s_(s) {}

  PhyloTree parse() {
    const int root = subtree(-1);
    skip();
    if (!eat(';')) fail("expected ';'");
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return build(root);
  }

 private:
  struct Node {
    int label = 0;  // 1-based leaf label, 0 for internal
    std::vector<std::pair<int, Rational>> children;
  };

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("newick: " + what + " at offset " +
                                std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string token() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::string_view("(),:;").find(s_[pos_]) ==
                                   std::string_view::npos &&
           !std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  Rational length() {
    skip();
    if (!eat(':')) return Rational(1);
    skip();
    const std::size_t at = pos_;
    const std::string tok = token();
    try {
      TropNum x = TropNum::parse(tok);
      if (x.is_inf() || x.value() < 0) throw ValueParseError(tok);
      return x.value();
    } catch (const ValueParseError&) {
      pos_ = at;
      fail("bad branch length '" + tok + "'");
    }
  }

  int subtree(int /*parent*/) {
    skip();
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    if (eat('(')) {
      do {
        const int child = subtree(id);
        const Rational len = length();
        nodes_[id].children.emplace_back(child, len);
        skip();
      } while (eat(','));
      if (!eat(')')) fail("expected ')' or ','");
      skip();
      if (!token().empty()) fail("internal labels are not supported");
      return id;
    }
    const std::size_t at = pos_;
    const std::string tok = token();
    if (tok.empty() ||
        !std::all_of(tok.begin(), tok.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        tok.size() > 3) {
      pos_ = at;
      fail("expected a leaf label");
    }
    nodes_[id].label = std::stoi(tok);
    if (nodes_[id].label < 1) {
      pos_ = at;
      fail("leaf labels start at 1");
    }
    return id;
  }

  PhyloTree build(int root) {
    int leaves = 0;
    for (const Node& n : nodes_) leaves += n.label > 0;
    if (leaves < 3) fail("need at least 3 leaves");
    std::vector<char> used(leaves + 1, 0);
    std::vector<int> vertex(nodes_.size(), -1);
    int next = leaves;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Node& n = nodes_[i];
      if (n.label > 0) {
        if (n.label > leaves || used[n.label]) {
          fail("leaf labels must be exactly 1.." + std::to_string(leaves));
        }
        used[n.label] = 1;
        vertex[i] = n.label - 1;
      } else if (static_cast<int>(i) != root || n.children.size() != 2) {
        vertex[i] = next++;
      }
    }
    std::vector<PhyloTree::Edge> edges;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Node& n = nodes_[i];
      if (static_cast<int>(i) == root && n.children.size() == 2) {
        // Bifurcating root: merge its two edges into one.
        const auto& [a, la] = n.children[0];
        const auto& [b, lb] = n.children[1];
        edges.push_back({vertex[a], vertex[b], la + lb});
        continue;
      }
      for (const auto& [c, len] : n.children) {
        edges.push_back({vertex[i], vertex[c], len});
      }
    }
    try {
      return PhyloTree(leaves, std::move(edges));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("newick: ") + e.what());
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<Node> nodes_;
};

}  // namespace

std::string to_newick(const PhyloTree& t) {
  std::vector<std::vector<std::pair<int, int>>> adj(t.vertices());
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    adj[t.edges()[i].u].emplace_back(t.edges()[i].v, static_cast<int>(i));
    adj[t.edges()[i].v].emplace_back(t.edges()[i].u, static_cast<int>(i));
  }
  NewickWriter w{t, std::move(adj)};
  const int root = w.adj[0].front().first;
  return w.write(root, -1) + ";";
}

PhyloTree parse_newick(std::string_view text) {
  return NewickParser(text).parse();
}

}  // namespace tropsp
