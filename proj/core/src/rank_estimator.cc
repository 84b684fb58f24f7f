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

#include "cmrank/rank_estimator.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <ostream>
#include <sstream>
#include <thread>

#include "cmrank/errors.h"
#include "cmrank/family_spec.h"

namespace cmrank {
namespace {

// 2/0.1 evaluates to 20.000000000000004 on some inputs; snap before ceil so
// exact quotients do not round up.
std::int64_t snapped_ceil(double x) { return static_cast<std::int64_t>(std::ceil(x - 1e-9)); }

struct SampleTally {
  // Explored size -> number of samples whose term was 1/size.
  std::map<std::int64_t, std::int64_t> inverse_sizes;
  std::uint64_t queries = 0;
  std::int64_t truncated = 0;

  void merge(const SampleTally& other) {
    for (const auto& [size, count] : other.inverse_sizes) inverse_sizes[size] += count;
    queries += other.queries;
    truncated += other.truncated;
  }
};

void run_sample(const LocalOracle& oracle, const EstimatorPlan& plan, const RandomStream& master,
                std::int64_t index, SampleTally& tally) {
  RandomStream rng = master.split(static_cast<std::uint64_t>(index));
  const NodeHandle root = oracle.sample_root(rng);
  if (plan.mode == EstimatorMode::kRadius) {
    const BallReport report = ball(oracle, root, static_cast<int>(plan.k));
    tally.queries += report.edges_queried;
    if (!report.exhausted) ++tally.truncated;
    ++tally.inverse_sizes[static_cast<std::int64_t>(report.size)];
  } else {
    const CappedComponent comp = component_capped(oracle, root, static_cast<std::size_t>(plan.k));
    tally.queries += comp.edges_queried;
    if (comp.over_cap()) {
      ++tally.truncated;
    } else {
      ++tally.inverse_sizes[static_cast<std::int64_t>(*comp.size)];
    }
  }
}

std::string format_double(double value) {
  std::ostringstream os;
  os.precision(12);
  os << value;
  return os.str();
}

}  // namespace

std::string_view to_string(EstimatorMode mode) {
  return mode == EstimatorMode::kRadius ? "radius" : "cap";
}

EstimatorMode parse_mode(std::string_view text) {
  if (text == "radius") return EstimatorMode::kRadius;
  if (text == "cap" || text == "vertex-cap") return EstimatorMode::kVertexCap;
  throw UsageError("unknown estimator mode '" + std::string(text) + "'");
}

EstimatorPlan plan(double epsilon, EstimatorMode mode) {
  if (!(epsilon > 0 && epsilon < 1)) throw UsageError("epsilon must lie in (0, 1)");
  EstimatorPlan p;
  p.epsilon = epsilon;
  p.k = std::max<std::int64_t>(1, snapped_ceil(2.0 / epsilon));
  p.samples = std::max<std::int64_t>(1, snapped_ceil(2.0 / (epsilon * epsilon) * std::log(2.0 / epsilon)));
  p.mode = mode;
  return p;
}

Estimate estimate_total_rank(const LocalOracle& oracle, const EstimatorPlan& plan,
                             std::uint64_t seed, const EstimateOptions& options) {
  if (plan.k < 1 || plan.samples < 1) throw UsageError("plan needs k >= 1 and samples >= 1");
  const auto start = std::chrono::steady_clock::now();
  const RandomStream master(seed);
  const int threads = static_cast<int>(
      std::clamp<std::int64_t>(options.threads, 1, plan.samples));

  std::vector<SampleTally> tallies(static_cast<std::size_t>(threads));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  auto work = [&](int t) {
    try {
      for (std::int64_t i = t; i < plan.samples; i += threads) {
        run_sample(oracle, plan, master, i, tallies[static_cast<std::size_t>(t)]);
      }
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  SampleTally total;
  for (const auto& t : tallies) total.merge(t);

  double inverse_sum = 0;
  for (const auto& [size, count] : total.inverse_sizes) {
    inverse_sum += static_cast<double>(count) / static_cast<double>(size);
  }
  Estimate est;
  est.plan = plan;
  est.seed = seed;
  est.mean_inverse_size = inverse_sum / static_cast<double>(plan.samples);
  est.value = 1.0 - est.mean_inverse_size;
  est.queries = total.queries;
  est.truncated = total.truncated;
  est.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return est;
}

Rational sample_term(const LocalOracle& oracle, const NodeHandle& root, const EstimatorPlan& plan) {
  if (plan.mode == EstimatorMode::kRadius) {
    const BallReport report = ball(oracle, root, static_cast<int>(plan.k));
    return Rational(1, static_cast<std::int64_t>(report.size));
  }
  const CappedComponent comp = component_capped(oracle, root, static_cast<std::size_t>(plan.k));
  return comp.over_cap() ? Rational(0) : Rational(1, static_cast<std::int64_t>(*comp.size));
}

Rational expected_estimate_exact(const LocalOracle& oracle, const EstimatorPlan& plan) {
  const auto roots = oracle.root_distribution();
  if (!roots) throw PreconditionError(oracle.describe() + " has no finite root distribution");
  Rational expected_term(0);
  for (const auto& [node, probability] : *roots) {
    expected_term += probability * sample_term(oracle, node, plan);
  }
  return Rational(1) - expected_term;
}

std::vector<ConvergenceRow> convergence_table(std::string_view family,
                                              const std::vector<std::size_t>& sizes,
                                              const EstimatorPlan& plan, std::uint64_t seed,
                                              const EstimateOptions& options) {
  const RandomStream master(seed);
  std::vector<ConvergenceRow> rows;
  auto add_row = [&](std::optional<std::size_t> size, const LocalOracle& oracle, std::uint64_t index) {
    ConvergenceRow row;
    row.size = size;
    row.exact = oracle.known_total_rank();
    row.estimate = estimate_total_rank(oracle, plan, master.split(index).seed(), options);
    if (row.exact) row.abs_error = std::abs(row.estimate.value - row.exact->to_double());
    rows.push_back(std::move(row));
  };
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    add_row(sizes[i], *parse_family(family_at_size(family, sizes[i])), i);
  }
  add_row(std::nullopt, *family_limit(family), sizes.size());
  return rows;
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "size,exact,estimate,abs_error,queries\n";
  for (const auto& row : rows) {
    out << (row.size ? std::to_string(*row.size) : "inf") << ","
        << (row.exact ? format_double(row.exact->to_double()) : "") << ","
        << format_double(row.estimate.value) << ","
        << (row.abs_error ? format_double(*row.abs_error) : "") << "," << row.estimate.queries
        << "\n";
  }
}

NonadditivityReport nonadditivity_experiment(int degree, int r, const EstimatorPlan& plan,
                                             std::uint64_t seed, const EstimateOptions& options) {
  if (r < 3 || degree != 2 * r - 1) {
    throw PreconditionError("non-additivity experiment needs degree = 2r - 1 with r >= 3");
  }
  std::vector<int> u_colors;
  std::vector<int> w_colors;
  for (int c = 1; c <= degree; ++c) (c <= r ? u_colors : w_colors).push_back(c);
  const RandomStream master(seed);
  NonadditivityReport report;
  report.degree = degree;
  report.r = r;
  report.rho_u = estimate_total_rank(*colored_tree_subgraph(degree, u_colors), plan,
                                     master.split(0).seed(), options);
  report.rho_w = estimate_total_rank(*colored_tree_subgraph(degree, w_colors), plan,
                                     master.split(1).seed(), options);
  report.rho_full = estimate_total_rank(*regular_tree(degree), plan, master.split(2).seed(), options);
  report.sum = report.rho_u.value + report.rho_w.value;
  report.bound = Rational(2) - Rational(2, r);
  return report;
}

}  // namespace cmrank
