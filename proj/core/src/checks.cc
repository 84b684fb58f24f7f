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

#include "cmrank/checks.h"

#include "cmrank/generators.h"
#include "cmrank/graph.h"
#include "cmrank/graphing.h"
#include "cmrank/partition.h"
#include "cmrank/random_instances.h"

namespace cmrank::checks {
namespace {

constexpr std::size_t kKeptFailures = 20;

std::size_t random_size(RandomStream& rng, std::size_t max) {
  return 1 + static_cast<std::size_t>(rng.uniform(max));
}

}  // namespace

void TrialSummary::fail(std::string what) {
  ++failure_count;
  if (failures.size() < kKeptFailures) failures.push_back(std::move(what));
}

TrialSummary run_submodular_trials(std::size_t trials, std::uint64_t seed, std::size_t nodes) {
  TrialSummary summary;
  summary.name = "submodular";
  const RandomStream master(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    RandomStream rng = master.split(t);
    const FiniteGraph g = generators::random_graph(nodes, rng.uniform01(), rng);
    const SubmodularReport report = check_submodular(g, {.seed = rng.next()});
    ++summary.trials;
    summary.items_checked += report.pairs_checked;
    for (const auto& v : report.violations) {
      summary.fail("trial " + std::to_string(t) + ": " +
                   (v.kind == SubmodularViolation::Kind::kSubmodularity ? "submodularity" : "monotonicity"));
    }
  }
  return summary;
}

TrialSummary run_supermodular_trials(std::size_t trials, std::uint64_t seed, std::size_t max_points) {
  TrialSummary summary;
  summary.name = "supermod";
  const RandomStream master(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    RandomStream rng = master.split(t);
    const auto space = WeightedSpace::uniform(random_size(rng, max_points));
    const Partition p = random_instances::random_partition(space, rng);
    const Partition q = random_instances::random_partition(space, rng);
    const Partition r = random_instances::random_common_refinement(p, q, rng);
    const SupermodularReport report = check_supermodular_triple(p, q, r);
    ++summary.trials;
    summary.items_checked += 2;
    if (!report.preconditions_hold()) {
      summary.fail("trial " + std::to_string(t) + ": generator broke a precondition: " +
                   report.precondition_failures.front());
      continue;
    }
    if (report.inequality_violated()) {
      summary.fail("trial " + std::to_string(t) + ": slack " + report.slack.to_string());
    }
    Rational weighted_defect(0);
    for (std::size_t x = 0; x < space->point_count(); ++x) {
      weighted_defect += space->weight(x) * defect(p, q, r, x);
    }
    if (weighted_defect != report.slack) {
      summary.fail("trial " + std::to_string(t) + ": defect sum " + weighted_defect.to_string() +
                   " != slack " + report.slack.to_string());
    }
  }
  return summary;
}

TrialSummary run_sandwich_trials(std::size_t trials, std::uint64_t seed, std::size_t max_nodes) {
  TrialSummary summary;
  summary.name = "sandwich";
  const RandomStream master(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    RandomStream rng = master.split(t);
    const std::size_t n = random_size(rng, max_nodes);
    const int degree_cap = 1 + static_cast<int>(rng.uniform(4));
    FiniteGraph g = generators::random_graph(n, rng.uniform01(), rng, degree_cap);
    if (g.edge_count() == 0) {
      // eta is undefined without edges; add one so the trial still counts.
      if (n < 2) g = generators::path(2);
      else g = FiniteGraph(n, {{0, 1}});
    }
    auto weights = random_instances::random_component_weights(g, rng);
    const WeightedGraphing wg(g, std::move(weights));
    const EdgeSet x = random_instances::random_edge_subset(g, rng);
    const SandwichReport report = check_rho_eta_sandwich(wg, x);
    ++summary.trials;
    summary.items_checked += 2;
    if (!report.holds()) {
      summary.fail("trial " + std::to_string(t) + ": " + report.lower.to_string() + " <= " +
                   report.rho.to_string() + " <= " + report.upper.to_string() + " fails");
    }
  }
  return summary;
}

TrialSummary run_rerand_trials(std::size_t trials, std::uint64_t seed, std::size_t max_points) {
  TrialSummary summary;
  summary.name = "rerand";
  {
    // Two points of weights 1/3 and 2/3 in one class: re-randomizing moves
    // the law to (1/2, 1/2).
    const auto space = WeightedSpace::make({Rational(1, 3), Rational(2, 3)});
    const Partition joint = Partition::indiscrete(space);
    ++summary.items_checked;
    if (has_rerandomizing_property(joint)) summary.fail("two-point non-example reported re-randomizing");
    const auto law = rerandomized_distribution(joint).probability;
    if (law != std::vector<Rational>{Rational(1, 2), Rational(1, 2)}) {
      summary.fail("two-point non-example: re-randomized law is not (1/2, 1/2)");
    }
  }
  const RandomStream master(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    RandomStream rng = master.split(t);
    const auto space = random_instances::random_level_space(random_size(rng, max_points), rng);
    const Partition p = random_instances::make_rerandomizing(random_instances::random_partition(space, rng));
    const Partition q = random_instances::make_rerandomizing(random_instances::random_partition(space, rng));
    ++summary.trials;
    summary.items_checked += 3;
    if (!has_rerandomizing_property(p) || !has_rerandomizing_property(q)) {
      summary.fail("trial " + std::to_string(t) + ": generator produced a non-re-randomizing partition");
      continue;
    }
    if (!has_rerandomizing_property(random_instances::split_finite_classes(p, rng))) {
      summary.fail("trial " + std::to_string(t) + ": splitting finite classes lost the property");
    }
    if (!has_rerandomizing_property(join(p, q))) {
      summary.fail("trial " + std::to_string(t) + ": join lost the property");
    }
  }
  return summary;
}

}  // namespace cmrank::checks
