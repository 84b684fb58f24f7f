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

#ifndef CMRANK_GRAPH_H_
#define CMRANK_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cmrank/partition.h"
#include "cmrank/random.h"
#include "cmrank/rational.h"

namespace cmrank {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  int neighbor;
  std::size_t edge;
};

// Simple undirected graph with a declared degree bound. Edges are identified
// by their position in edges(). Copies share an identity token, so an EdgeSet
// built for one copy is valid for all of them.
class FiniteGraph {
 public:
  // Throws UsageError on out-of-range ids, self-loops, duplicate edges or a
  // node whose degree exceeds degree_bound. Without a bound the maximum
  // degree is used.
  FiniteGraph(std::size_t node_count, std::vector<Edge> edges,
              std::optional<int> degree_bound = std::nullopt);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }
  int degree_bound() const { return degree_bound_; }
  int max_degree() const;
  int degree(int node) const { return static_cast<int>(adjacency_[node].size()); }
  // Incident edges in ascending neighbor order.
  const std::vector<Incidence>& incidences(int node) const { return adjacency_[node]; }
  std::uint64_t id() const { return id_; }

 private:
  std::size_t node_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  int degree_bound_ = 0;
  std::uint64_t id_;
};

// Subset of a graph's edges as a membership mask.
class EdgeSet {
 public:
  explicit EdgeSet(const FiniteGraph& g);
  static EdgeSet all(const FiniteGraph& g);
  static EdgeSet from_indices(const FiniteGraph& g, const std::vector<std::size_t>& indices);
  // Bit i of mask selects edge i. Requires edge_count() <= 64.
  static EdgeSet from_mask(const FiniteGraph& g, std::uint64_t mask);

  std::uint64_t graph_id() const { return graph_id_; }
  std::size_t universe_size() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::size_t edge) const { return bits_.test(edge); }
  void insert(std::size_t edge) { bits_.set(edge); }
  void erase(std::size_t edge) { bits_.reset(edge); }
  std::vector<std::size_t> indices() const;
  bool is_subset_of(const EdgeSet& other) const;

  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);
  EdgeSet& operator-=(const EdgeSet& other);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }
  EdgeSet complement() const;

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.graph_id_ == b.graph_id_ && a.bits_ == b.bits_;
  }

 private:
  void require_same_graph(const EdgeSet& other) const;

  std::uint64_t graph_id_;
  boost::dynamic_bitset<> bits_;
};

// Throws UsageError if x was not built for g.
void require_edge_set_of(const FiniteGraph& g, const EdgeSet& x);

// Component label per node of (V, X) by union-find; labels are the smallest
// node id of each component.
std::vector<int> component_labels(const FiniteGraph& g, const EdgeSet& x);
std::size_t component_count(const FiniteGraph& g, const EdgeSet& x);

// Partition of V into connected components of (V, X) over the uniform space
// on V. Isolated nodes are singletons; no class is flagged.
Partition components(const FiniteGraph& g, const EdgeSet& x);

// Cycle-matroid rank |V| - #components(V, X).
std::size_t rank(const FiniteGraph& g, const EdgeSet& x);

// rank / |V| via the component count.
Rational normalized_rank(const FiniteGraph& g, const EdgeSet& x);
// 1 - sum_u (1/n)(1/|X_u|): the same quantity as an expectation over a
// uniform random node.
Rational normalized_rank_by_expectation(const FiniteGraph& g, const EdgeSet& x);

// 1 - c(G)/n.
Rational total_rank_exact(const FiniteGraph& g);

bool is_acyclic(const FiniteGraph& g, const EdgeSet& x);

// BFS forest, roots taken in ascending node id and neighbors scanned in
// ascending id.
EdgeSet spanning_forest(const FiniteGraph& g);

struct SubmodularViolation {
  enum class Kind { kSubmodularity, kMonotonicity };
  Kind kind;
  EdgeSet x;
  EdgeSet y;
};

struct SubmodularCheckOptions {
  // Graphs with at most this many edges are checked over all 4^m pairs.
  std::size_t exhaustive_edge_limit = 12;
  std::size_t sampled_pairs = 1000;
  std::uint64_t seed = 0;
};

struct SubmodularReport {
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
  std::vector<SubmodularViolation> violations;
  bool ok() const { return violations.empty(); }
};

// rho(X u Y) + rho(X n Y) <= rho(X) + rho(Y) for every pair, and
// rho(X) <= rho(Y) whenever X is a subset of Y.
SubmodularReport check_submodular(const FiniteGraph& g, const SubmodularCheckOptions& options = {});

}  // namespace cmrank

#endif  // CMRANK_GRAPH_H_
