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

#ifndef CMRANK_GRAPHING_H_
#define CMRANK_GRAPHING_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "cmrank/graph.h"
#include "cmrank/partition.h"
#include "cmrank/rational.h"

namespace cmrank {

// Adjacent pairs (a, b) where lambda(a) * deg_{b}(a) != lambda(b) * deg_{a}(b).
// For a simple graph this is lambda(a) != lambda(b) across an edge.
std::vector<std::pair<int, int>> check_measure_preservation(const FiniteGraph& g,
                                                            const WeightedSpace& weights);

// A finite graph with a node measure that satisfies measure preservation:
// the finite model of a graphing.
class WeightedGraphing {
 public:
  // Throws PreconditionError when measure preservation fails.
  WeightedGraphing(FiniteGraph graph, SpacePtr weights);

  static WeightedGraphing uniform(FiniteGraph graph);
  // Skips the measure-preservation check. Only for exercising the checker.
  static WeightedGraphing unchecked(FiniteGraph graph, SpacePtr weights);

  const FiniteGraph& graph() const { return graph_; }
  const SpacePtr& weights() const { return weights_; }
  const Rational& weight(std::size_t node) const { return weights_->weight(node); }

 private:
  struct Unchecked {};
  WeightedGraphing(FiniteGraph graph, SpacePtr weights, Unchecked);

  FiniteGraph graph_;
  SpacePtr weights_;
};

// d-bar = sum_u lambda(u) deg(u).
Rational average_degree(const WeightedGraphing& wg);

// eta(X) = (1/d-bar) sum_u lambda(u) deg_X(u). Throws PreconditionError when
// d-bar = 0.
Rational edge_measure(const WeightedGraphing& wg, const EdgeSet& x);

// Component partition of (J, X) over the graphing's node measure.
Partition component_partition(const WeightedGraphing& wg, const EdgeSet& x);

// rho(X) = 1 - psi(component partition of X).
Rational rho(const WeightedGraphing& wg, const EdgeSet& x);

struct SandwichReport {
  Rational lower;  // d-bar/(1+D) * eta(X)
  Rational rho;
  Rational upper;  // d-bar * eta(X)
  bool holds() const { return lower <= rho && rho <= upper; }
  bool lower_tight() const { return lower == rho; }
};

SandwichReport check_rho_eta_sandwich(const WeightedGraphing& wg, const EdgeSet& x);

// Same nodes and weights, edges restricted to f (kept in ascending index
// order). parent_edge maps the subgraphing's edge ids back to the parent's.
struct Subgraphing {
  WeightedGraphing graphing;
  std::vector<std::size_t> parent_edge;

  // X must lie inside f; returns the same edges as an EdgeSet of the
  // subgraphing.
  EdgeSet restrict(const FiniteGraph& parent, const EdgeSet& x) const;
};

Subgraphing subgraphing(const WeightedGraphing& wg, const EdgeSet& f);

struct SubgraphingReport {
  Rational eta_sub;     // eta_H(X)
  Rational eta_scaled;  // (d-bar / d-bar_H) eta_G(X)
  Rational rho_sub;     // rho_H(X)
  Rational rho_parent;  // rho_G(X)
  bool holds() const { return eta_sub == eta_scaled && rho_sub == rho_parent; }
};

// Edge-measure rescaling and intrinsic rho for X inside a nonempty f.
SubgraphingReport check_subgraphing(const WeightedGraphing& wg, const EdgeSet& f,
                                    const EdgeSet& x);

}  // namespace cmrank

#endif  // CMRANK_GRAPHING_H_
