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

#include "cmrank/minorize.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "cmrank/errors.h"
#include "cmrank/graphing.h"
#include "cmrank/random_instances.h"

namespace cmrank {
namespace {

// Rank of a rational matrix by Gaussian elimination.
std::size_t matrix_rank(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [c](const auto& row) { return !row[c].is_zero(); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

MinorizingMeasure::MinorizingMeasure(const FiniteGraph& g, std::vector<Rational> edge_weights)
    : graph_id_(g.id()), weights_(std::move(edge_weights)) {
  if (weights_.size() != g.edge_count()) throw UsageError("one weight per edge expected");
  for (const auto& w : weights_) {
    if (w < Rational(0)) throw UsageError("minorizing measure weights must be nonnegative");
  }
}

MinorizingMeasure MinorizingMeasure::zero(const FiniteGraph& g) {
  return MinorizingMeasure(g, std::vector<Rational>(g.edge_count()));
}

Rational MinorizingMeasure::measure(const EdgeSet& x) const {
  if (x.graph_id() != graph_id_) throw UsageError("edge set belongs to a different graph");
  Rational total(0);
  for (auto e : x.indices()) total += weights_[e];
  return total;
}

ChainOrder::ChainOrder(const FiniteGraph& g, std::vector<std::size_t> order) : order_(std::move(order)) {
  std::vector<bool> seen(g.edge_count(), false);
  if (order_.size() != g.edge_count()) throw UsageError("chain order must list every edge once");
  for (auto e : order_) {
    if (e >= g.edge_count() || seen[e]) throw UsageError("chain order is not a permutation");
    seen[e] = true;
  }
}

ChainOrder ChainOrder::identity(const FiniteGraph& g) {
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  return ChainOrder(g, std::move(order));
}

ChainOrder ChainOrder::random(const FiniteGraph& g, RandomStream& rng) {
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  return ChainOrder(g, std::move(order));
}

ChainOrder ChainOrder::with_prefix(const FiniteGraph& g, const EdgeSet& f) {
  require_edge_set_of(g, f);
  std::vector<std::size_t> order = f.indices();
  for (auto e : f.complement().indices()) order.push_back(e);
  return ChainOrder(g, std::move(order));
}

MinorizingMeasure greedy_minorizer(const FiniteGraph& g, const ChainOrder& order) {
  std::vector<Rational> weights(g.edge_count());
  EdgeSet chain(g);
  Rational previous(0);
  for (auto e : order.order()) {
    chain.insert(e);
    const Rational current = normalized_rank(g, chain);
    weights[e] = current - previous;
    previous = current;
  }
  return MinorizingMeasure(g, std::move(weights));
}

MinorizingMeasure forest_minorizer(const FiniteGraph& g, const EdgeSet& f) {
  require_edge_set_of(g, f);
  if (!is_acyclic(g, f)) throw PreconditionError("forest measure needs an acyclic edge set");
  if (rank(g, f) != rank(g, EdgeSet::all(g))) {
    throw PreconditionError("forest measure needs a spanning forest");
  }
  // (d-bar/2) eta(X n F) with uniform weights is |X n F| / n.
  std::vector<Rational> weights(g.edge_count());
  const Rational share(1, static_cast<std::int64_t>(g.node_count()));
  for (auto e : f.indices()) weights[e] = share;
  return MinorizingMeasure(g, std::move(weights));
}

MinorizingReport verify_minorizing(const FiniteGraph& g, const MinorizingMeasure& alpha,
                                   const MinorizingOptions& options) {
  if (alpha.graph_id() != g.id()) throw UsageError("measure belongs to a different graph");
  MinorizingReport report;
  auto check = [&](const EdgeSet& x) {
    ++report.subsets_checked;
    const Rational a = alpha.measure(x);
    const Rational r = normalized_rank(g, x);
    if (a > r) report.violations.push_back({x, a, r});
  };
  const std::size_t m = g.edge_count();
  if (m <= options.exhaustive_edge_limit && m < 64) {
    report.exhaustive = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) check(EdgeSet::from_mask(g, mask));
  } else {
    RandomStream rng(options.seed);
    check(EdgeSet(g));
    check(EdgeSet::all(g));
    for (std::size_t i = 0; i < options.sampled_subsets; ++i) check(random_instances::random_edge_subset(g, rng));
  }
  report.base = alpha.measure(EdgeSet::all(g)) == normalized_rank(g, EdgeSet::all(g));
  return report;
}

bool is_extremal_minorizer(const FiniteGraph& g, const MinorizingMeasure& alpha) {
  const std::size_t m = g.edge_count();
  if (m > 6) throw UsageError("extremality check is limited to 6 edges");
  if (!verify_minorizing(g, alpha).ok()) return false;
  std::vector<std::vector<Rational>> tight;
  for (std::size_t e = 0; e < m; ++e) {
    if (alpha.weight(e).is_zero()) {
      std::vector<Rational> row(m);
      row[e] = Rational(1);
      tight.push_back(std::move(row));
    }
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    const EdgeSet x = EdgeSet::from_mask(g, mask);
    if (alpha.measure(x) != normalized_rank(g, x)) continue;
    std::vector<Rational> row(m);
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) row[e] = Rational(1);
    }
    tight.push_back(std::move(row));
  }
  return matrix_rank(std::move(tight), m) == m;
}

ForestAdditivityReport forest_additivity_check(const FiniteGraph& g, std::size_t trials,
                                               RandomStream& rng) {
  if (g.edge_count() == 0) throw PreconditionError("forest additivity needs at least one edge");
  if (!is_acyclic(g, EdgeSet::all(g))) throw PreconditionError("graph is not a forest");
  const WeightedGraphing wg = WeightedGraphing::uniform(g);
  const Rational half_dbar = average_degree(wg) / Rational(2);
  ForestAdditivityReport report;
  auto check = [&](const EdgeSet& u) {
    ++report.subsets_checked;
    if (rho(wg, u) != half_dbar * edge_measure(wg, u)) report.violations.push_back(u);
  };
  check(EdgeSet::all(g));
  check(EdgeSet(g));
  for (std::size_t i = 0; i < trials; ++i) check(random_instances::random_edge_subset(g, rng));
  return report;
}

}  // namespace cmrank
