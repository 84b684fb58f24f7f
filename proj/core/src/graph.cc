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

#include "cmrank/graph.h"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "cmrank/errors.h"

namespace cmrank {
namespace {

std::uint64_t next_graph_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Smaller root wins, so the label of a component is its minimum node.
template <typename EdgeVisitor>
std::vector<int> union_find_labels(std::size_t n, EdgeVisitor&& for_each_edge) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for_each_edge([&](int u, int v) {
    int a = find_root(parent, u);
    int b = find_root(parent, v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  });
  for (std::size_t x = 0; x < n; ++x) parent[x] = find_root(parent, static_cast<int>(x));
  return parent;
}

std::size_t rank_of_mask(const FiniteGraph& g, std::uint64_t mask) {
  std::vector<int> parent(g.node_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t merges = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!(mask >> e & 1)) continue;
    int a = find_root(parent, g.edge(e).u);
    int b = find_root(parent, g.edge(e).v);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      ++merges;
    }
  }
  return merges;
}

void add_violations(const EdgeSet& x, const EdgeSet& y, std::size_t rx,
                    std::size_t ry, std::size_t r_union, std::size_t r_inter,
                    SubmodularReport& report) {
  if (r_union + r_inter > rx + ry) {
    report.violations.push_back({SubmodularViolation::Kind::kSubmodularity, x, y});
  }
  if (x.is_subset_of(y) && rx > ry) {
    report.violations.push_back({SubmodularViolation::Kind::kMonotonicity, x, y});
  }
}

}  // namespace

FiniteGraph::FiniteGraph(std::size_t node_count, std::vector<Edge> edges,
                         std::optional<int> degree_bound)
    : node_count_(node_count), edges_(std::move(edges)), adjacency_(node_count), id_(next_graph_id()) {
  if (node_count_ == 0) throw UsageError("graph needs at least one node");
  std::set<std::pair<int, int>> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= node_count_ ||
        static_cast<std::size_t>(v) >= node_count_) {
      throw UsageError("edge " + std::to_string(e) + " has a node id out of range");
    }
    if (u == v) throw UsageError("self-loop at node " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw UsageError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    adjacency_[u].push_back({v, e});
    adjacency_[v].push_back({u, e});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }
  const int actual = max_degree();
  degree_bound_ = degree_bound.value_or(actual);
  if (degree_bound_ < 0) throw UsageError("degree bound must be nonnegative");
  if (actual > degree_bound_) {
    throw UsageError("maximum degree " + std::to_string(actual) + " exceeds bound " +
                     std::to_string(degree_bound_));
  }
}

int FiniteGraph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

EdgeSet::EdgeSet(const FiniteGraph& g) : graph_id_(g.id()), bits_(g.edge_count()) {}

EdgeSet EdgeSet::all(const FiniteGraph& g) {
  EdgeSet s(g);
  s.bits_.set();
  return s;
}

EdgeSet EdgeSet::from_indices(const FiniteGraph& g, const std::vector<std::size_t>& indices) {
  EdgeSet s(g);
  for (auto e : indices) {
    if (e >= g.edge_count()) throw UsageError("edge index " + std::to_string(e) + " out of range");
    s.bits_.set(e);
  }
  return s;
}

EdgeSet EdgeSet::from_mask(const FiniteGraph& g, std::uint64_t mask) {
  if (g.edge_count() > 64) throw UsageError("from_mask needs at most 64 edges");
  if (g.edge_count() < 64 && (mask >> g.edge_count()) != 0) {
    throw UsageError("mask selects edges beyond the edge list");
  }
  EdgeSet s(g);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (mask >> e & 1) s.bits_.set(e);
  }
  return s;
}

std::vector<std::size_t> EdgeSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(bits_.count());
  for (auto e = bits_.find_first(); e != boost::dynamic_bitset<>::npos; e = bits_.find_next(e)) {
    out.push_back(e);
  }
  return out;
}

void EdgeSet::require_same_graph(const EdgeSet& other) const {
  if (graph_id_ != other.graph_id_) throw UsageError("edge sets belong to different graphs");
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  require_same_graph(other);
  return bits_.is_subset_of(other.bits_);
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  require_same_graph(other);
  bits_ |= other.bits_;
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  require_same_graph(other);
  bits_ &= other.bits_;
  return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& other) {
  require_same_graph(other);
  bits_ -= other.bits_;
  return *this;
}

EdgeSet EdgeSet::complement() const {
  EdgeSet s = *this;
  s.bits_.flip();
  return s;
}

void require_edge_set_of(const FiniteGraph& g, const EdgeSet& x) {
  if (x.graph_id() != g.id() || x.universe_size() != g.edge_count()) {
    throw UsageError("edge set does not belong to this graph");
  }
}

std::vector<int> component_labels(const FiniteGraph& g, const EdgeSet& x) {
  require_edge_set_of(g, x);
  return union_find_labels(g.node_count(), [&](auto&& unite) {
    for (auto e : x.indices()) unite(g.edge(e).u, g.edge(e).v);
  });
}

std::size_t component_count(const FiniteGraph& g, const EdgeSet& x) {
  const auto labels = component_labels(g, x);
  std::size_t count = 0;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] == static_cast<int>(v)) ++count;
  }
  return count;
}

Partition components(const FiniteGraph& g, const EdgeSet& x) {
  return Partition(WeightedSpace::uniform(g.node_count()), component_labels(g, x));
}

std::size_t rank(const FiniteGraph& g, const EdgeSet& x) {
  return g.node_count() - component_count(g, x);
}

Rational normalized_rank(const FiniteGraph& g, const EdgeSet& x) {
  return Rational(static_cast<std::int64_t>(rank(g, x)), static_cast<std::int64_t>(g.node_count()));
}

Rational normalized_rank_by_expectation(const FiniteGraph& g, const EdgeSet& x) {
  const auto labels = component_labels(g, x);
  std::vector<std::int64_t> size(g.node_count(), 0);
  for (int label : labels) ++size[label];
  const auto n = static_cast<std::int64_t>(g.node_count());
  Rational expectation(0);
  for (int label : labels) expectation += Rational(1, n * size[label]);
  return Rational(1) - expectation;
}

Rational total_rank_exact(const FiniteGraph& g) { return normalized_rank(g, EdgeSet::all(g)); }

bool is_acyclic(const FiniteGraph& g, const EdgeSet& x) { return rank(g, x) == x.size(); }

EdgeSet spanning_forest(const FiniteGraph& g) {
  EdgeSet forest(g);
  std::vector<bool> visited(g.node_count(), false);
  std::deque<int> queue;
  for (std::size_t root = 0; root < g.node_count(); ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    queue.push_back(static_cast<int>(root));
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [w, e] : g.incidences(u)) {
        if (visited[w]) continue;
        visited[w] = true;
        forest.insert(e);
        queue.push_back(w);
      }
    }
  }
  return forest;
}

SubmodularReport check_submodular(const FiniteGraph& g, const SubmodularCheckOptions& options) {
  SubmodularReport report;
  const std::size_t m = g.edge_count();
  // With a common denominator n the rational inequalities reduce to integer
  // inequalities on the rank, which keeps the check exact.
  if (m <= options.exhaustive_edge_limit && m < 64) {
    report.exhaustive = true;
    const std::uint64_t subsets = std::uint64_t{1} << m;
    std::vector<std::uint32_t> table(subsets);
    for (std::uint64_t s = 0; s < subsets; ++s) {
      table[s] = static_cast<std::uint32_t>(rank_of_mask(g, s));
    }
    for (std::uint64_t x = 0; x < subsets; ++x) {
      for (std::uint64_t y = 0; y < subsets; ++y) {
        ++report.pairs_checked;
        const bool submod_bad = table[x | y] + table[x & y] > table[x] + table[y];
        const bool mono_bad = (x & ~y) == 0 && table[x] > table[y];
        if (submod_bad || mono_bad) {
          add_violations(EdgeSet::from_mask(g, x), EdgeSet::from_mask(g, y), table[x],
                         table[y], table[x | y], table[x & y], report);
        }
      }
    }
    return report;
  }
  RandomStream rng(options.seed);
  for (std::size_t i = 0; i < options.sampled_pairs; ++i) {
    EdgeSet x(g);
    EdgeSet y(g);
    for (std::size_t e = 0; e < m; ++e) {
      if (rng.next() & 1) x.insert(e);
      // Every fourth pair is nested so monotonicity gets exercised.
      if (i % 4 == 0 ? (x.contains(e) || (rng.next() & 1)) : (rng.next() & 1)) y.insert(e);
    }
    ++report.pairs_checked;
    add_violations(x, y, rank(g, x), rank(g, y), rank(g, x | y), rank(g, x & y), report);
  }
  return report;
}

}  // namespace cmrank
