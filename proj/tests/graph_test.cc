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

#include "cmrank/graph.h"

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "cmrank/errors.h"
#include "cmrank/generators.h"
#include "cmrank/random.h"
#include "cmrank/random_instances.h"
#include "oracles.h"

namespace cmrank {
namespace {

TEST(FiniteGraphTest, RejectsMalformedInput) {
  EXPECT_THROW(FiniteGraph(3, {{0, 0}}), UsageError);
  EXPECT_THROW(FiniteGraph(3, {{0, 1}, {1, 0}}), UsageError);
  EXPECT_THROW(FiniteGraph(3, {{0, 3}}), UsageError);
  EXPECT_THROW(FiniteGraph(3, {{0, 1}, {0, 2}}, 1), UsageError);
  EXPECT_EQ(FiniteGraph(3, {{0, 1}, {0, 2}}).degree_bound(), 2);
}

TEST(EdgeSetTest, SetAlgebra) {
  auto g = generators::cycle(5);
  auto a = EdgeSet::from_indices(g, {0, 1, 2});
  auto b = EdgeSet::from_indices(g, {2, 3});
  EXPECT_EQ((a | b).size(), 4u);
  EXPECT_EQ((a & b).indices(), std::vector<std::size_t>{2});
  EXPECT_EQ((a - b).size(), 2u);
  EXPECT_EQ(a.complement().size(), 2u);
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_EQ(EdgeSet::from_mask(g, 0b101).indices(), (std::vector<std::size_t>{0, 2}));
}

TEST(EdgeSetTest, MixingGraphsThrows) {
  auto g = generators::cycle(4);
  auto h = generators::cycle(4);
  EXPECT_THROW(EdgeSet::all(g) | EdgeSet::all(h), UsageError);
  EXPECT_THROW(rank(g, EdgeSet::all(h)), UsageError);
}

TEST(RankTest, HandValues) {
  auto k3 = generators::complete(3);
  EXPECT_EQ(rank(k3, EdgeSet::all(k3)), 2u);
  EXPECT_EQ(normalized_rank(k3, EdgeSet::all(k3)), Rational(2, 3));
  EXPECT_EQ(total_rank_exact(generators::cycle(100)), Rational(99, 100));
  EXPECT_EQ(total_rank_exact(generators::disjoint_triangles(50)), Rational(2, 3));
  EXPECT_EQ(total_rank_exact(generators::edgeless(7)), Rational(0));
  EXPECT_EQ(total_rank_exact(generators::torus(5)), Rational(24, 25));
}

TEST(RankTest, AgreesWithDfsAndCycleDeletionOracles) {
  RandomStream rng(3);
  for (int t = 0; t < 300; ++t) {
    auto g = generators::random_graph(2 + rng.uniform(12), 0.3, rng);
    auto x = random_instances::random_edge_subset(g, rng);
    const auto c = oracles::dfs_component_count(g, x);
    EXPECT_EQ(component_count(g, x), c);
    EXPECT_EQ(rank(g, x), g.node_count() - c);
    EXPECT_EQ(rank(g, x), oracles::rank_by_cycle_deletion(g, x));
    EXPECT_EQ(normalized_rank(g, x), normalized_rank_by_expectation(g, x));
    // Same partition up to relabeling.
    const auto labels = component_labels(g, x);
    const auto ref = oracles::dfs_components(g, x);
    for (std::size_t u = 0; u < g.node_count(); ++u) {
      for (std::size_t v = 0; v < g.node_count(); ++v) {
        EXPECT_EQ(labels[u] == labels[v], ref[u] == ref[v]);
      }
    }
  }
}

TEST(RankTest, SpanningForest) {
  RandomStream rng(9);
  for (int t = 0; t < 100; ++t) {
    auto g = generators::random_graph(1 + rng.uniform(15), 0.25, rng);
    auto f = spanning_forest(g);
    EXPECT_TRUE(is_acyclic(g, f));
    EXPECT_EQ(f.size(), rank(g, EdgeSet::all(g)));
  }
  auto k3 = generators::complete(3);
  EXPECT_FALSE(is_acyclic(k3, EdgeSet::all(k3)));
}

TEST(SubmodularTest, K4ExhaustiveCountsAllPairs) {
  auto rep = check_submodular(generators::complete(4));
  EXPECT_TRUE(rep.exhaustive);
  EXPECT_EQ(rep.pairs_checked, 4096u);
  EXPECT_TRUE(rep.ok());
}

TEST(SubmodularTest, SampledOnLargerGraph) {
  RandomStream rng(1);
  auto g = generators::random_graph_with_edges(12, 30, rng);
  SubmodularCheckOptions options;
  options.sampled_pairs = 500;
  auto rep = check_submodular(g, options);
  EXPECT_FALSE(rep.exhaustive);
  EXPECT_EQ(rep.pairs_checked, 500u);
  EXPECT_TRUE(rep.ok());
}

TEST(GeneratorsTest, LabeledGraphCounts) {
  // 2^(n choose 2)
  EXPECT_EQ(generators::all_labeled_graphs(3).size(), 8u);
  EXPECT_EQ(generators::all_labeled_graphs(4).size(), 64u);
  EXPECT_EQ(generators::all_labeled_graphs(5).size(), 1024u);
}

TEST(GeneratorsTest, Shapes) {
  EXPECT_EQ(generators::torus(4).edge_count(), 32u);
  EXPECT_EQ(generators::torus(4).degree_bound(), 4);
  EXPECT_EQ(generators::star(3).edge_count(), 3u);
  EXPECT_EQ(generators::path(5).edge_count(), 4u);
  RandomStream rng(2);
  auto f = generators::random_forest(30, rng);
  EXPECT_TRUE(is_acyclic(f, EdgeSet::all(f)));
  auto g = generators::random_graph(40, 0.5, rng, 3);
  EXPECT_LE(g.max_degree(), 3);
  auto sparse = generators::random_graph_with_edges(10000, 500, rng);
  EXPECT_EQ(sparse.edge_count(), 500u);
  EXPECT_THROW(generators::random_graph_with_edges(4, 7, rng), UsageError);
}

}  // namespace
}  // namespace cmrank
