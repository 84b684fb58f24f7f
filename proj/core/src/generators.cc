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

#include "cmrank/generators.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "cmrank/errors.h"

namespace cmrank::generators {

FiniteGraph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
  return FiniteGraph(n, std::move(edges));
}

FiniteGraph cycle(std::size_t n) {
  if (n < 3) throw UsageError("cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<int>(i), static_cast<int>((i + 1) % n)});
  }
  return FiniteGraph(n, std::move(edges));
}

FiniteGraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  return FiniteGraph(n, std::move(edges));
}

FiniteGraph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<int>(i)});
  return FiniteGraph(leaves + 1, std::move(edges));
}

FiniteGraph torus(std::size_t side) {
  if (side < 3) throw UsageError("torus needs side >= 3");
  std::vector<Edge> edges;
  auto id = [side](std::size_t r, std::size_t c) { return static_cast<int>(r * side + c); };
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      edges.push_back({id(r, c), id(r, (c + 1) % side)});
      edges.push_back({id(r, c), id((r + 1) % side, c)});
    }
  }
  return FiniteGraph(side * side, std::move(edges));
}

FiniteGraph disjoint_triangles(std::size_t count) {
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < count; ++t) {
    const int b = static_cast<int>(3 * t);
    edges.push_back({b, b + 1});
    edges.push_back({b + 1, b + 2});
    edges.push_back({b, b + 2});
  }
  return FiniteGraph(3 * count, std::move(edges));
}

FiniteGraph edgeless(std::size_t n) { return FiniteGraph(n, {}); }

FiniteGraph random_graph(std::size_t n, double p, RandomStream& rng, int max_degree) {
  std::vector<Edge> edges;
  std::vector<int> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!rng.bernoulli(p)) continue;
      if (max_degree > 0 && (degree[i] >= max_degree || degree[j] >= max_degree)) continue;
      ++degree[i];
      ++degree[j];
      edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return FiniteGraph(n, std::move(edges));
}

FiniteGraph random_graph_with_edges(std::size_t n, std::size_t edge_count, RandomStream& rng) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (edge_count > pairs) throw UsageError("too many edges for a simple graph");
  std::vector<Edge> all;
  if (pairs <= 4096 || 2 * edge_count > pairs) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) all.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
    shuffle(all, rng);
    all.resize(edge_count);
    return FiniteGraph(n, std::move(all));
  }
  // Sparse and large: rejection sampling at most doubles the draws.
  std::unordered_set<std::uint64_t> seen;
  while (all.size() < edge_count) {
    auto u = rng.uniform(n), v = rng.uniform(n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!seen.insert(u * n + v).second) continue;
    all.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return FiniteGraph(n, std::move(all));
}

FiniteGraph random_forest(std::size_t n, RandomStream& rng, double attach_probability) {
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  shuffle(relabel, rng);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    if (!rng.bernoulli(attach_probability)) continue;
    const auto parent = static_cast<std::size_t>(rng.uniform(v));
    edges.push_back({relabel[parent], relabel[v]});
  }
  return FiniteGraph(n, std::move(edges));
}

std::vector<FiniteGraph> all_labeled_graphs(std::size_t n) {
  if (n == 0 || n > 6) throw UsageError("all_labeled_graphs supports 1 <= n <= 6");
  std::vector<Edge> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  std::vector<FiniteGraph> out;
  const std::uint64_t count = std::uint64_t{1} << slots.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1) edges.push_back(slots[s]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace cmrank::generators
