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

#ifndef CMRANK_RANK_ESTIMATOR_H_
#define CMRANK_RANK_ESTIMATOR_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmrank/local_access.h"
#include "cmrank/rational.h"

namespace cmrank {

enum class EstimatorMode {
  // Per-sample term 1/|B_k(x)|. Faithful, but balls grow like D^k on trees.
  kRadius,
  // Per-sample term 1/|component| when the component has fewer than k nodes,
  // otherwise 0. O(k D) queries per sample.
  kVertexCap,
};

std::string_view to_string(EstimatorMode mode);
EstimatorMode parse_mode(std::string_view text);

struct EstimatorPlan {
  double epsilon = 0.1;
  std::int64_t k = 20;
  std::int64_t samples = 600;
  EstimatorMode mode = EstimatorMode::kVertexCap;
};

// k = ceil(2/eps); samples = ceil((2/eps^2) ln(2/eps)), the Hoeffding count
// for [0,1]-valued terms with deviation eps/2 and two-sided tail eps.
// Throws UsageError unless 0 < eps < 1.
EstimatorPlan plan(double epsilon, EstimatorMode mode = EstimatorMode::kVertexCap);

struct Estimate {
  double value = 0;  // R = 1 - mean_inverse_size
  EstimatorPlan plan;
  std::uint64_t seed = 0;
  double mean_inverse_size = 0;
  std::uint64_t queries = 0;
  // Samples whose exploration was cut off (radius not exhausted / over cap).
  std::int64_t truncated = 0;
  double wall_seconds = 0;
};

struct EstimateOptions {
  // Samples are split over this many threads. Every sample draws from the
  // stream split(seed, sample index), and terms are merged as exact counts,
  // so the result does not depend on the thread count.
  int threads = 1;
};

Estimate estimate_total_rank(const LocalOracle& oracle, const EstimatorPlan& plan,
                             std::uint64_t seed, const EstimateOptions& options = {});

// The per-sample term as an exact rational (its denominator is the explored
// size, or the term is 0).
Rational sample_term(const LocalOracle& oracle, const NodeHandle& root, const EstimatorPlan& plan);

// E[R] taken exactly over the oracle's root distribution. Throws
// PreconditionError for oracles without a finite root distribution.
Rational expected_estimate_exact(const LocalOracle& oracle, const EstimatorPlan& plan);

struct ConvergenceRow {
  std::optional<std::size_t> size;  // nullopt for the limit row
  std::optional<Rational> exact;
  Estimate estimate;
  std::optional<double> abs_error;
};

// One row per size of the parametrized family (see family_at_size), followed
// by a row for the limit family. Row i is estimated with seed split(seed, i).
std::vector<ConvergenceRow> convergence_table(std::string_view family,
                                              const std::vector<std::size_t>& sizes,
                                              const EstimatorPlan& plan, std::uint64_t seed,
                                              const EstimateOptions& options = {});

// CSV with header "size,exact,estimate,abs_error,queries". The limit row has
// size "inf"; missing values are empty.
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

struct NonadditivityReport {
  int degree = 0;
  int r = 0;
  Estimate rho_u;  // colors 1..r
  Estimate rho_w;  // colors r+1..degree
  Estimate rho_full;
  double sum = 0;
  Rational bound;  // 2 - 2/r
  bool bound_holds() const { return sum >= bound.to_double(); }
};

// Splits the properly colored degree-regular tree (degree = 2r - 1, r >= 3)
// into U (colors 1..r) and W (the rest) and estimates rho on each part.
// Throws PreconditionError on other (degree, r).
NonadditivityReport nonadditivity_experiment(int degree, int r, const EstimatorPlan& plan,
                                             std::uint64_t seed, const EstimateOptions& options = {});

}  // namespace cmrank

#endif  // CMRANK_RANK_ESTIMATOR_H_
