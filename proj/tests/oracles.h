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

// Independent reference computations for tests. Nothing here calls into the
// implementation paths it is used to check.

#ifndef CMRANK_TESTS_ORACLES_H_
#define CMRANK_TESTS_ORACLES_H_

#include <algorithm>
#include <cstddef>
#include <vector>

#include "cmrank/graph.h"
#include "cmrank/partition.h"
#include "cmrank/rational.h"

namespace cmrank::oracles {

// Component id per node by iterative DFS over an adjacency matrix built from
// the selected edges. Ids are assigned in order of the smallest node.
inline std::vector<int> dfs_components(const FiniteGraph& g, const EdgeSet& x) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!x.contains(e)) continue;
    adj[g.edge(e).u][g.edge(e).v] = true;
    adj[g.edge(e).v][g.edge(e).u] = true;
  }
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (adj[u][w] && comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline std::size_t dfs_component_count(const FiniteGraph& g, const EdgeSet& x) {
  const auto comp = dfs_components(g, x);
  int best = -1;
  for (int c : comp) best = std::max(best, c);
  return static_cast<std::size_t>(best + 1);
}

// psi class by class: sum over unflagged classes of pi(class)/|class|.
inline Rational psi_by_classes(const Partition& p) {
  Rational total(0);
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    if (p.is_infinite(static_cast<int>(c))) continue;
    Rational mass(0);
    for (int x : p.members(static_cast<int>(c))) mass += p.space()->weight(x);
    total += mass / Rational(static_cast<std::int64_t>(p.class_size(static_cast<int>(c))));
  }
  return total;
}

// Rank by repeatedly deleting edges that lie on a cycle: what survives is a
// spanning forest of (V, X), whose size is the rank.
inline std::size_t rank_by_cycle_deletion(const FiniteGraph& g, const EdgeSet& x) {
  EdgeSet kept = x;
  for (auto e : x.indices()) {
    EdgeSet without = kept;
    without.erase(e);
    // e lies on a cycle iff its endpoints stay connected without it.
    const auto comp = dfs_components(g, without);
    if (comp[g.edge(e).u] == comp[g.edge(e).v]) kept = without;
  }
  return kept.size();
}

}  // namespace cmrank::oracles

#endif  // CMRANK_TESTS_ORACLES_H_
