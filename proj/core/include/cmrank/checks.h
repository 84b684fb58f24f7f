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

#ifndef CMRANK_CHECKS_H_
#define CMRANK_CHECKS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cmrank::checks {

// Outcome of a batch of randomized verification trials. Only the first few
// failure descriptions are kept; failure_count counts all of them.
struct TrialSummary {
  std::string name;
  std::uint64_t trials = 0;
  // Individual inequalities/identities evaluated across all trials.
  std::uint64_t items_checked = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;
  bool ok() const { return failure_count == 0; }
  void fail(std::string what);
};

// Random graphs on `nodes` nodes, each checked for monotonicity and
// submodularity of rho (exhaustive up to 12 edges, sampled above).
TrialSummary run_submodular_trials(std::size_t trials, std::uint64_t seed, std::size_t nodes);

// Random (P, Q, R) on uniform spaces of 1..max_points points, R a common
// refinement, with flagged classes. Checks the psi inequality and that the
// pi-weighted defect sums to the slack.
TrialSummary run_supermodular_trials(std::size_t trials, std::uint64_t seed, std::size_t max_points);

// Random graphs on 1..max_nodes nodes with per-component weights and random
// subsets; checks d-bar/(1+D) eta <= rho <= d-bar eta.
TrialSummary run_sandwich_trials(std::size_t trials, std::uint64_t seed, std::size_t max_nodes);

// Random re-randomizing P, Q on weighted spaces of 1..max_points points:
// splitting finite classes and joining must keep the property. Also checks
// the two-point non-example.
TrialSummary run_rerand_trials(std::size_t trials, std::uint64_t seed, std::size_t max_points);

}  // namespace cmrank::checks

#endif  // CMRANK_CHECKS_H_
