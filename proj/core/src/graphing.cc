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

#include "cmrank/graphing.h"

#include <string>

#include "cmrank/errors.h"

namespace cmrank {
namespace {

Rational weighted_degree_sum(const WeightedGraphing& wg, const EdgeSet& x) {
  const auto& g = wg.graph();
  std::vector<std::int64_t> deg(g.node_count(), 0);
  for (auto e : x.indices()) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  Rational total(0);
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    if (deg[u] != 0) total += wg.weight(u) * Rational(deg[u]);
  }
  return total;
}

}  // namespace

std::vector<std::pair<int, int>> check_measure_preservation(const FiniteGraph& g,
                                                            const WeightedSpace& weights) {
  if (weights.point_count() != g.node_count()) {
    throw UsageError("node measure has " + std::to_string(weights.point_count()) +
                     " points, graph has " + std::to_string(g.node_count()) + " nodes");
  }
  std::vector<std::pair<int, int>> violations;
  for (const auto& [a, b] : g.edges()) {
    // deg_{b}(a) = deg_{a}(b) = 1 in a simple graph.
    if (weights.weight(a) != weights.weight(b)) violations.emplace_back(a, b);
  }
  return violations;
}

WeightedGraphing::WeightedGraphing(FiniteGraph graph, SpacePtr weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  if (!weights_) throw UsageError("graphing needs a node measure");
  const auto violations = check_measure_preservation(graph_, *weights_);
  if (!violations.empty()) {
    throw PreconditionError("measure preservation fails on edge " +
                            std::to_string(violations.front().first) + "-" +
                            std::to_string(violations.front().second));
  }
}

WeightedGraphing::WeightedGraphing(FiniteGraph graph, SpacePtr weights, Unchecked)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  if (!weights_ || weights_->point_count() != graph_.node_count()) {
    throw UsageError("node measure does not match the graph");
  }
}

WeightedGraphing WeightedGraphing::uniform(FiniteGraph graph) {
  auto space = WeightedSpace::uniform(graph.node_count());
  return WeightedGraphing(std::move(graph), std::move(space));
}

WeightedGraphing WeightedGraphing::unchecked(FiniteGraph graph, SpacePtr weights) {
  return WeightedGraphing(std::move(graph), std::move(weights), Unchecked{});
}

Rational average_degree(const WeightedGraphing& wg) {
  return weighted_degree_sum(wg, EdgeSet::all(wg.graph()));
}

Rational edge_measure(const WeightedGraphing& wg, const EdgeSet& x) {
  require_edge_set_of(wg.graph(), x);
  const Rational dbar = average_degree(wg);
  if (dbar.is_zero()) throw PreconditionError("edge measure is undefined when the average degree is 0");
  return weighted_degree_sum(wg, x) / dbar;
}

Partition component_partition(const WeightedGraphing& wg, const EdgeSet& x) {
  return Partition(wg.weights(), component_labels(wg.graph(), x));
}

Rational rho(const WeightedGraphing& wg, const EdgeSet& x) {
  return Rational(1) - psi(component_partition(wg, x));
}

SandwichReport check_rho_eta_sandwich(const WeightedGraphing& wg, const EdgeSet& x) {
  const Rational dbar = average_degree(wg);
  const Rational eta = edge_measure(wg, x);
  SandwichReport report;
  report.lower = dbar / Rational(1 + wg.graph().degree_bound()) * eta;
  report.rho = rho(wg, x);
  report.upper = dbar * eta;
  return report;
}

EdgeSet Subgraphing::restrict(const FiniteGraph& parent, const EdgeSet& x) const {
  require_edge_set_of(parent, x);
  EdgeSet out(graphing.graph());
  std::size_t found = 0;
  for (std::size_t i = 0; i < parent_edge.size(); ++i) {
    if (x.contains(parent_edge[i])) {
      out.insert(i);
      ++found;
    }
  }
  if (found != x.size()) throw UsageError("edge set is not contained in the subgraphing");
  return out;
}

Subgraphing subgraphing(const WeightedGraphing& wg, const EdgeSet& f) {
  const auto& g = wg.graph();
  require_edge_set_of(g, f);
  std::vector<Edge> edges;
  std::vector<std::size_t> parent_edge = f.indices();
  for (auto e : parent_edge) edges.push_back(g.edge(e));
  FiniteGraph sub(g.node_count(), std::move(edges), g.degree_bound());
  return Subgraphing{WeightedGraphing(std::move(sub), wg.weights()), std::move(parent_edge)};
}

SubgraphingReport check_subgraphing(const WeightedGraphing& wg, const EdgeSet& f,
                                    const EdgeSet& x) {
  if (f.empty()) throw PreconditionError("subgraphing edge set must be nonempty");
  if (!x.is_subset_of(f)) throw PreconditionError("X must be contained in the subgraphing");
  const Subgraphing h = subgraphing(wg, f);
  const EdgeSet x_sub = h.restrict(wg.graph(), x);
  SubgraphingReport report;
  report.eta_sub = edge_measure(h.graphing, x_sub);
  report.eta_scaled = average_degree(wg) / average_degree(h.graphing) * edge_measure(wg, x);
  report.rho_sub = rho(h.graphing, x_sub);
  report.rho_parent = rho(wg, x);
  return report;
}

}  // namespace cmrank
