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

#ifndef CMRANK_RANDOM_INSTANCES_H_
#define CMRANK_RANDOM_INSTANCES_H_

#include <cstddef>

#include "cmrank/graph.h"
#include "cmrank/partition.h"
#include "cmrank/random.h"

namespace cmrank::random_instances {

// Class count 1 + Geometric(1/2) capped at the point count, points assigned
// uniformly, each class flagged infinite with flag_probability.
Partition random_partition(const SpacePtr& space, RandomStream& rng, double flag_probability = 0.2);

// A random common refinement of p and q: every nonempty intersection of a
// p-class with a q-class is cut into random pieces. A piece may be flagged
// (with flag_probability) only when its p-class and q-class are both flagged,
// so the result refines both in the flagged order as well.
Partition random_common_refinement(const Partition& p, const Partition& q, RandomStream& rng,
                                   double flag_probability = 0.2);

// Randomly cut the unflagged classes of p; flagged classes stay intact.
Partition split_finite_classes(const Partition& p, RandomStream& rng);

// Weights proportional to integers drawn from {1, ..., levels}; ties are
// common, so re-randomizing partitions with non-singleton classes exist.
SpacePtr random_level_space(std::size_t point_count, RandomStream& rng, int levels = 3);

// Cut every unflagged class of p by weight value, giving a partition with the
// re-randomizing property.
Partition make_rerandomizing(const Partition& p);

// Node weights constant on each connected component of g: component i gets
// an integer level in {1..levels}, normalized.
SpacePtr random_component_weights(const FiniteGraph& g, RandomStream& rng, int levels = 4);

// Each edge kept with an independently drawn density.
EdgeSet random_edge_subset(const FiniteGraph& g, RandomStream& rng);

}  // namespace cmrank::random_instances

#endif  // CMRANK_RANDOM_INSTANCES_H_
