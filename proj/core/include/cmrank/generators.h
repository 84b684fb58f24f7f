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

#ifndef CMRANK_GENERATORS_H_
#define CMRANK_GENERATORS_H_

#include <cstddef>
#include <vector>

#include "cmrank/graph.h"
#include "cmrank/random.h"

namespace cmrank::generators {

FiniteGraph path(std::size_t n);
FiniteGraph cycle(std::size_t n);
FiniteGraph complete(std::size_t n);
// K_{1,leaves}, center is node 0.
FiniteGraph star(std::size_t leaves);
// side x side torus grid (side >= 3).
FiniteGraph torus(std::size_t side);
FiniteGraph disjoint_triangles(std::size_t count);
FiniteGraph edgeless(std::size_t n);

// Erdos-Renyi G(n, p), dropping edges that would push a degree over
// max_degree (when max_degree > 0).
FiniteGraph random_graph(std::size_t n, double p, RandomStream& rng, int max_degree = 0);
// Random graph with exactly edge_count edges (uniform among simple graphs on n nodes).
FiniteGraph random_graph_with_edges(std::size_t n, std::size_t edge_count, RandomStream& rng);
// Random forest: each node past the first attaches to an earlier node with
// probability attach_probability, then node ids are shuffled.
FiniteGraph random_forest(std::size_t n, RandomStream& rng, double attach_probability = 0.8);

// Every labeled simple graph on n nodes (2^(n choose 2) graphs). n <= 6.
std::vector<FiniteGraph> all_labeled_graphs(std::size_t n);

}  // namespace cmrank::generators

#endif  // CMRANK_GENERATORS_H_
