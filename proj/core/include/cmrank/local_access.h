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

#ifndef CMRANK_LOCAL_ACCESS_H_
#define CMRANK_LOCAL_ACCESS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmrank/graph.h"
#include "cmrank/random.h"
#include "cmrank/rational.h"

namespace cmrank {

// Opaque node identity within one oracle. Lazily generated families encode
// the route from the sampled root (a lattice offset, a reduced color word),
// finite families a (component, node) pair.
struct NodeHandle {
  std::vector<std::int64_t> coords;
  friend bool operator==(const NodeHandle&, const NodeHandle&) = default;
};

struct WeightedRoot {
  NodeHandle node;
  Rational probability;
};

struct NodeHandleHash {
  std::size_t operator()(const NodeHandle& h) const;
};

// Neighborhood oracle for a bounded-degree graph, seen as the law of a random
// rooted connected graph. Implementations are immutable after construction,
// so one oracle may serve concurrent explorations.
class LocalOracle {
 public:
  virtual ~LocalOracle() = default;

  virtual int degree_bound() const = 0;
  virtual NodeHandle sample_root(RandomStream& rng) const = 0;
  // At most degree_bound() handles; deterministic for a given handle.
  virtual std::vector<NodeHandle> neighbors(const NodeHandle& node) const = 0;

  // Exact total rank when the family has a closed form.
  virtual std::optional<Rational> known_total_rank() const { return std::nullopt; }
  // The full root law, for oracles with finitely many root classes. Lets
  // expectations over the root be taken exactly.
  virtual std::optional<std::vector<WeightedRoot>> root_distribution() const { return std::nullopt; }
  virtual std::string describe() const = 0;
};

using OraclePtr = std::shared_ptr<const LocalOracle>;

struct ExplorationOptions {
  // Re-query every discovered neighbor and require the reverse adjacency.
  bool check_symmetry = false;
};

struct BallReport {
  std::size_t size = 1;
  // Every node of the ball has all its neighbors inside the ball, i.e. the
  // ball is the whole component.
  bool exhausted = false;
  int radius_reached = 0;
  std::uint64_t edges_queried = 0;
};

// BFS ball of the given radius around root. Throws UsageError on negative
// radius and OracleError on a detected contract violation.
BallReport ball(const LocalOracle& oracle, const NodeHandle& root, int radius,
                const ExplorationOptions& options = {});

struct CappedComponent {
  // Set iff the component has fewer than `cap` nodes.
  std::optional<std::size_t> size;
  std::uint64_t edges_queried = 0;
  bool over_cap() const { return !size.has_value(); }
};

// BFS without radius limit that stops as soon as `cap` nodes are known.
// At most cap * degree_bound adjacency entries are read.
CappedComponent component_capped(const LocalOracle& oracle, const NodeHandle& root,
                                 std::size_t cap, const ExplorationOptions& options = {});

// ---- Families ------------------------------------------------------------

// Two-way infinite path Z.
OraclePtr infinite_path();
// Lattice Z^dim with nearest-neighbor edges.
OraclePtr grid(int dim);
// Infinite degree-regular tree.
OraclePtr regular_tree(int degree);
// Finite graph with a uniform random root.
OraclePtr finite_graph_oracle(FiniteGraph g);

struct MixtureComponent {
  std::string name;
  FiniteGraph component;  // must be connected
  Rational probability;   // mass of roots landing in a copy of this component
};

// Disjoint union of finite connected components. The root lands in a copy of
// component i with probability p_i and is uniform over its nodes, so the
// total rank is 1 - sum p_i / |component_i|. Uniform rooting is involution
// invariant for vertex-transitive components; other components are rejected
// unless allow_non_transitive is set, in which case the caller vouches for
// the resulting size-biased law.
OraclePtr component_mixture(std::vector<MixtureComponent> components,
                            bool allow_non_transitive = false);

// Subgraph of the degree-regular tree formed by the edges whose color lies in
// `colors` (a subset of 1..degree) under the lazy proper edge coloring: the
// root colors its edges 1..degree in order, and every other node, reached by
// an edge of color c, colors its child edges with the remaining colors in
// ascending order.
OraclePtr colored_tree_subgraph(int degree, std::vector<int> colors);

// True iff every node can be mapped to node 0 by an automorphism. Brute
// force; intended for small mixture components.
bool is_vertex_transitive(const FiniteGraph& g);

}  // namespace cmrank

#endif  // CMRANK_LOCAL_ACCESS_H_
