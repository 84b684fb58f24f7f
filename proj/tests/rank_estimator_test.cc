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

#include <cmath>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cmrank/errors.h"
#include "cmrank/family_spec.h"
#include "cmrank/generators.h"
#include "cmrank/graph.h"
#include "cmrank/local_access.h"
#include "cmrank/random.h"
#include "oracles.h"

namespace cmrank {
namespace {

// Expected estimator value on a finite graph computed by plain BFS from every
// node, independent of the oracle layer.
Rational bfs_expected(const FiniteGraph& g, const EstimatorPlan& p) {
  const auto comp = oracles::dfs_components(g, EdgeSet::all(g));
  Rational total(0);
  const auto n = static_cast<std::int64_t>(g.node_count());
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    if (p.mode == EstimatorMode::kVertexCap) {
      std::int64_t size = 0;
      for (int c : comp) size += (c == comp[s]);
      if (size < p.k) total += Rational(1, size);
      continue;
    }
    std::vector<int> dist(g.node_count(), -1);
    std::queue<int> q;
    q.push(static_cast<int>(s));
    dist[s] = 0;
    std::int64_t size = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (dist[u] == p.k) continue;
      for (const auto& inc : g.incidences(u)) {
        if (dist[inc.neighbor] == -1) {
          dist[inc.neighbor] = dist[u] + 1;
          ++size;
          q.push(inc.neighbor);
        }
      }
    }
    total += Rational(1, size);
  }
  return Rational(1) - total / Rational(n);
}

TEST(PlanTest, KnownValues) {
  auto a = plan(0.1);
  EXPECT_EQ(a.k, 20);
  EXPECT_EQ(a.samples, 600);
  EXPECT_EQ(a.mode, EstimatorMode::kVertexCap);
  auto b = plan(0.5);
  EXPECT_EQ(b.k, 4);
  EXPECT_EQ(b.samples, 12);
  auto c = plan(0.2, EstimatorMode::kRadius);
  EXPECT_EQ(c.k, 10);
  EXPECT_EQ(c.samples, 116);
  EXPECT_EQ(c.mode, EstimatorMode::kRadius);
  EXPECT_THROW(plan(0.0), UsageError);
  EXPECT_THROW(plan(1.0), UsageError);
  EXPECT_THROW(plan(-0.5), UsageError);
}

TEST(PlanTest, MatchesFormulaOnGrid) {
  for (double eps = 0.05; eps < 0.99; eps += 0.0137) {
    auto p = plan(eps);
    EXPECT_EQ(p.k, static_cast<std::int64_t>(std::ceil(2.0 / eps - 1e-9)));
    EXPECT_GE(static_cast<double>(p.samples), 2.0 / (eps * eps) * std::log(2.0 / eps) - 1e-6);
    EXPECT_GE(p.k, 1);
    EXPECT_GE(p.samples, 1);
  }
}

TEST(ModeTest, RoundTrip) {
  EXPECT_EQ(to_string(EstimatorMode::kRadius), "radius");
  EXPECT_EQ(to_string(EstimatorMode::kVertexCap), "cap");
  EXPECT_EQ(parse_mode("radius"), EstimatorMode::kRadius);
  EXPECT_EQ(parse_mode("cap"), EstimatorMode::kVertexCap);
  EXPECT_THROW(parse_mode("ball"), UsageError);
}

TEST(EstimateTest, CycleRadiusMode) {
  auto o = finite_graph_oracle(generators::cycle(100));
  auto est = estimate_total_rank(*o, plan(0.1, EstimatorMode::kRadius), 1);
  EXPECT_DOUBLE_EQ(est.value, 1.0 - 1.0 / 41.0);
  EXPECT_LE(std::abs(est.value - 0.99), 0.05);
}

TEST(EstimateTest, TrianglesAreExact) {
  auto o = parse_family("triangles");
  for (double eps : {0.5, 0.2, 0.1}) {
    auto est = estimate_total_rank(*o, plan(eps), 3);
    EXPECT_DOUBLE_EQ(est.value, 2.0 / 3.0);
    EXPECT_EQ(est.truncated, 0);
  }
}

TEST(EstimateTest, TreeOverCapsEverywhere) {
  auto o = regular_tree(3);
  auto p = plan(0.2);
  auto est = estimate_total_rank(*o, p, 4);
  EXPECT_DOUBLE_EQ(est.value, 1.0);
  EXPECT_EQ(est.truncated, p.samples);
}

TEST(EstimateTest, QueryBound) {
  for (const char* spec : {"tree:5", "grid:2", "cycle", "mixture:triangle@0.5,edge@0.5"}) {
    auto o = parse_family(spec);
    auto p = plan(0.1);
    auto est = estimate_total_rank(*o, p, 5);
    EXPECT_LE(est.queries, static_cast<std::uint64_t>(p.samples * p.k * o->degree_bound())) << spec;
  }
}

TEST(EstimateTest, DeterministicAcrossThreadCounts) {
  auto o = parse_family("mixture:triangle@0.25,square@0.25,edge@0.25,clique5@0.25");
  auto p = plan(0.1);
  auto one = estimate_total_rank(*o, p, 77);
  for (int threads : {2, 3, 8}) {
    EstimateOptions options;
    options.threads = threads;
    auto many = estimate_total_rank(*o, p, 77, options);
    EXPECT_EQ(one.value, many.value);
    EXPECT_EQ(one.queries, many.queries);
    EXPECT_EQ(one.truncated, many.truncated);
  }
}

TEST(BiasTest, ExactExpectationMatchesBfsOracle) {
  RandomStream rng(31);
  for (int t = 0; t < 40; ++t) {
    auto g = generators::random_graph(2 + rng.uniform(25), 0.12, rng);
    auto o = finite_graph_oracle(g);
    for (double eps : {0.5, 0.3}) {
      for (auto mode : {EstimatorMode::kRadius, EstimatorMode::kVertexCap}) {
        auto p = plan(eps, mode);
        EXPECT_EQ(expected_estimate_exact(*o, p), bfs_expected(g, p));
      }
    }
  }
}

TEST(BiasTest, WithinOneOverKAndSigned) {
  RandomStream rng(32);
  for (int t = 0; t < 40; ++t) {
    auto g = generators::random_graph(2 + rng.uniform(40), 0.08, rng);
    auto o = finite_graph_oracle(g);
    const Rational rk = total_rank_exact(g);
    for (double eps : {0.5, 0.2}) {
      auto pr = plan(eps, EstimatorMode::kRadius);
      const Rational er = expected_estimate_exact(*o, pr);
      EXPECT_GE(rk - er, Rational(0));
      EXPECT_LE(rk - er, Rational(1, pr.k));
      auto pc = plan(eps, EstimatorMode::kVertexCap);
      const Rational ec = expected_estimate_exact(*o, pc);
      EXPECT_GE(ec - rk, Rational(0));
      EXPECT_LE(ec - rk, Rational(1, pc.k));
    }
  }
}

TEST(BiasTest, CycleAndTriangles) {
  auto c100 = finite_graph_oracle(generators::cycle(100));
  EXPECT_EQ(expected_estimate_exact(*c100, plan(0.1, EstimatorMode::kRadius)), Rational(40, 41));
  EXPECT_EQ(expected_estimate_exact(*c100, plan(0.1)), Rational(1));
  auto tri = finite_graph_oracle(generators::disjoint_triangles(50));
  EXPECT_EQ(expected_estimate_exact(*tri, plan(0.1, EstimatorMode::kRadius)), Rational(2, 3));
  EXPECT_EQ(expected_estimate_exact(*tri, plan(0.1)), Rational(2, 3));
  EXPECT_THROW(expected_estimate_exact(*regular_tree(3), plan(0.5)), PreconditionError);
}

TEST(ConvergenceTest, CyclesAndCsv) {
  auto rows = convergence_table("cycle", {10, 100, 1000}, plan(0.2), 1);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(*rows[0].exact, Rational(9, 10));
  EXPECT_EQ(*rows[1].exact, Rational(99, 100));
  EXPECT_EQ(*rows[2].exact, Rational(999, 1000));
  EXPECT_FALSE(rows[3].size.has_value());
  std::ostringstream csv;
  write_convergence_csv(csv, rows);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "size,exact,estimate,abs_error,queries");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("10,0.9,", 0), 0u) << line;
  int count = 1;
  std::string last;
  while (std::getline(in, line)) {
    ++count;
    last = line;
  }
  EXPECT_EQ(count, 4);
  EXPECT_EQ(last.rfind("inf,", 0), 0u) << last;
}

TEST(ConvergenceTest, TorusExact) {
  auto rows = convergence_table("torus", {10, 31}, plan(0.5), 1);
  EXPECT_EQ(*rows[0].exact, Rational(99, 100));
  EXPECT_EQ(*rows[1].exact, Rational(960, 961));
}

TEST(NonadditivityTest, DegreeFive) {
  auto rep = nonadditivity_experiment(5, 3, plan(0.1), 1);
  EXPECT_EQ(rep.bound, Rational(4, 3));
  EXPECT_DOUBLE_EQ(rep.rho_u.value, 1.0);
  EXPECT_DOUBLE_EQ(rep.rho_w.value, 1.0);
  EXPECT_DOUBLE_EQ(rep.sum, 2.0);
  EXPECT_DOUBLE_EQ(rep.rho_full.value, 1.0);
  EXPECT_TRUE(rep.bound_holds());
}

TEST(NonadditivityTest, Preconditions) {
  EXPECT_THROW(nonadditivity_experiment(1, 1, plan(0.5), 1), PreconditionError);
  EXPECT_THROW(nonadditivity_experiment(3, 2, plan(0.5), 1), PreconditionError);
  EXPECT_THROW(nonadditivity_experiment(6, 3, plan(0.5), 1), PreconditionError);
  EXPECT_NO_THROW(nonadditivity_experiment(7, 4, plan(0.5), 1));
}

}  // namespace
}  // namespace cmrank
