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

#include "cmrank/random_instances.h"

#include <map>
#include <utility>
#include <vector>

namespace cmrank::random_instances {

Partition random_partition(const SpacePtr& space, RandomStream& rng, double flag_probability) {
  const std::size_t n = space->point_count();
  std::size_t classes = 1;
  while (classes < n && rng.bernoulli(0.5)) ++classes;
  std::vector<int> labels(n);
  for (auto& label : labels) label = static_cast<int>(rng.uniform(classes));
  std::vector<int> flagged;
  for (std::size_t c = 0; c < classes; ++c) {
    if (rng.bernoulli(flag_probability)) flagged.push_back(static_cast<int>(c));
  }
  // Drop flags on labels no point received.
  std::vector<bool> used(classes, false);
  for (int label : labels) used[static_cast<std::size_t>(label)] = true;
  std::erase_if(flagged, [&](int c) { return !used[static_cast<std::size_t>(c)]; });
  return Partition(space, labels, flagged);
}

Partition random_common_refinement(const Partition& p, const Partition& q, RandomStream& rng,
                                   double flag_probability) {
  const std::size_t n = p.point_count();
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (std::size_t x = 0; x < n; ++x) cells[{p.class_of(x), q.class_of(x)}].push_back(static_cast<int>(x));
  std::vector<int> labels(n);
  std::vector<int> flagged;
  int next = 0;
  for (const auto& [key, points] : cells) {
    const std::size_t pieces = 1 + rng.uniform(points.size());
    const int base = next;
    next += static_cast<int>(pieces);
    for (int x : points) labels[static_cast<std::size_t>(x)] = base + static_cast<int>(rng.uniform(pieces));
    if (p.is_infinite(key.first) && q.is_infinite(key.second)) {
      for (std::size_t piece = 0; piece < pieces; ++piece) {
        if (rng.bernoulli(flag_probability)) flagged.push_back(base + static_cast<int>(piece));
      }
    }
  }
  std::vector<bool> used(static_cast<std::size_t>(next), false);
  for (int label : labels) used[static_cast<std::size_t>(label)] = true;
  std::erase_if(flagged, [&](int c) { return !used[static_cast<std::size_t>(c)]; });
  return Partition(p.space(), labels, flagged);
}

Partition split_finite_classes(const Partition& p, RandomStream& rng) {
  std::vector<int> labels(p.point_count());
  std::vector<int> flagged;
  int next = 0;
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    const auto& members = p.members(static_cast<int>(c));
    if (p.is_infinite(static_cast<int>(c))) {
      for (int x : members) labels[static_cast<std::size_t>(x)] = next;
      flagged.push_back(next++);
      continue;
    }
    const std::size_t pieces = 1 + rng.uniform(members.size());
    for (int x : members) labels[static_cast<std::size_t>(x)] = next + static_cast<int>(rng.uniform(pieces));
    next += static_cast<int>(pieces);
  }
  return Partition(p.space(), labels, flagged);
}

SpacePtr random_level_space(std::size_t point_count, RandomStream& rng, int levels) {
  std::vector<std::int64_t> raw(point_count);
  std::int64_t total = 0;
  for (auto& r : raw) {
    r = 1 + static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(levels)));
    total += r;
  }
  std::vector<Rational> weights;
  weights.reserve(point_count);
  for (auto r : raw) weights.emplace_back(r, total);
  return WeightedSpace::make(std::move(weights));
}

Partition make_rerandomizing(const Partition& p) {
  const auto& space = *p.space();
  std::map<std::pair<int, Rational>, int> relabel;
  std::vector<int> labels(p.point_count());
  std::vector<int> flagged;
  for (std::size_t x = 0; x < p.point_count(); ++x) {
    const int cls = p.class_of(x);
    // Flagged classes keep one label; finite ones are keyed by weight too.
    const Rational key_weight = p.is_infinite(cls) ? Rational(-1) : space.weight(x);
    auto [it, inserted] = relabel.try_emplace({cls, key_weight}, static_cast<int>(relabel.size()));
    labels[x] = it->second;
    if (inserted && p.is_infinite(cls)) flagged.push_back(it->second);
  }
  return Partition(p.space(), labels, flagged);
}

SpacePtr random_component_weights(const FiniteGraph& g, RandomStream& rng, int levels) {
  const auto labels = component_labels(g, EdgeSet::all(g));
  std::map<int, std::int64_t> level;
  std::int64_t total = 0;
  for (int label : labels) {
    auto [it, inserted] = level.try_emplace(label, 0);
    if (inserted) it->second = 1 + static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(levels)));
    total += it->second;
  }
  std::vector<Rational> weights;
  weights.reserve(labels.size());
  for (int label : labels) weights.emplace_back(level.at(label), total);
  return WeightedSpace::make(std::move(weights));
}

EdgeSet random_edge_subset(const FiniteGraph& g, RandomStream& rng) {
  EdgeSet x(g);
  const double density = rng.uniform01();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (rng.bernoulli(density)) x.insert(e);
  }
  return x;
}

}  // namespace cmrank::random_instances
