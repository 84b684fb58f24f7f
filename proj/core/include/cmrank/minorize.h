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

#ifndef CMRANK_MINORIZE_H_
#define CMRANK_MINORIZE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cmrank/graph.h"
#include "cmrank/rational.h"

namespace cmrank {

// Nonnegative additive measure on a graph's edges: alpha(X) = sum of the
// per-edge weights over X.
class MinorizingMeasure {
 public:
  MinorizingMeasure(const FiniteGraph& g, std::vector<Rational> edge_weights);

  static MinorizingMeasure zero(const FiniteGraph& g);

  std::uint64_t graph_id() const { return graph_id_; }
  const std::vector<Rational>& edge_weights() const { return weights_; }
  const Rational& weight(std::size_t edge) const { return weights_[edge]; }
  Rational measure(const EdgeSet& x) const;

  friend bool operator==(const MinorizingMeasure&, const MinorizingMeasure&) = default;

 private:
  std::uint64_t graph_id_;
  std::vector<Rational> weights_;
};

// A maximal chain of edge sets grown one edge at a time, as the order in
// which edges are added.
class ChainOrder {
 public:
  // Throws UsageError unless order is a permutation of 0..edge_count-1.
  ChainOrder(const FiniteGraph& g, std::vector<std::size_t> order);
  static ChainOrder identity(const FiniteGraph& g);
  static ChainOrder random(const FiniteGraph& g, RandomStream& rng);
  // Edges of f first (ascending), then the rest (ascending).
  static ChainOrder with_prefix(const FiniteGraph& g, const EdgeSet& f);

  const std::vector<std::size_t>& order() const { return order_; }

 private:
  std::vector<std::size_t> order_;
};

// alpha(e_i) = rho(S_i) - rho(S_{i-1}) along the chain.
MinorizingMeasure greedy_minorizer(const FiniteGraph& g, const ChainOrder& order);

// 1/n on the edges of f, 0 elsewhere. Throws PreconditionError unless f is
// acyclic and spans (rank(f) = rank(E)).
MinorizingMeasure forest_minorizer(const FiniteGraph& g, const EdgeSet& f);

struct MinorizingOptions {
  std::size_t exhaustive_edge_limit = 12;
  std::size_t sampled_subsets = 4096;
  std::uint64_t seed = 0;
};

struct MinorizingViolation {
  EdgeSet subset;
  Rational alpha;
  Rational rho;
};

struct MinorizingReport {
  bool exhaustive = false;
  std::uint64_t subsets_checked = 0;
  std::vector<MinorizingViolation> violations;
  // alpha(E) == rho(E).
  bool base = false;
  bool ok() const { return violations.empty(); }
};

// alpha(X) <= rho(X) over all X (or a random sample on larger graphs).
MinorizingReport verify_minorizing(const FiniteGraph& g, const MinorizingMeasure& alpha,
                                   const MinorizingOptions& options = {});

// Whether alpha is a vertex of {alpha >= 0, alpha(X) <= rho(X) for all X}:
// the tight constraints must have full rank. Exhaustive, so limited to
// graphs with at most 6 edges (UsageError otherwise). Returns false for
// measures outside the polytope.
bool is_extremal_minorizer(const FiniteGraph& g, const MinorizingMeasure& alpha);

struct ForestAdditivityReport {
  std::uint64_t subsets_checked = 0;
  // Subsets U with rho(U) != (d-bar/2) eta(U).
  std::vector<EdgeSet> violations;
  bool ok() const { return violations.empty(); }
};

// On a forest rho is additive: rho(U) = (d-bar/2) eta(U) = |U|/n for every U.
// Checks E, the empty set and `trials` random subsets. Throws
// PreconditionError unless g is a forest with at least one edge.
ForestAdditivityReport forest_additivity_check(const FiniteGraph& g, std::size_t trials,
                                               RandomStream& rng);

}  // namespace cmrank

#endif  // CMRANK_MINORIZE_H_
