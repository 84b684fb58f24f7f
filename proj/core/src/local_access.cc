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

#include "cmrank/local_access.h"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "cmrank/errors.h"

namespace cmrank {
namespace {

std::vector<NodeHandle> checked_neighbors(const LocalOracle& oracle, const NodeHandle& node,
                                          const ExplorationOptions& options) {
  auto result = oracle.neighbors(node);
  if (result.size() > static_cast<std::size_t>(oracle.degree_bound())) {
    throw OracleError(oracle.describe() + ": node has " + std::to_string(result.size()) +
                      " neighbors, bound is " + std::to_string(oracle.degree_bound()));
  }
  if (options.check_symmetry) {
    for (const auto& other : result) {
      const auto back = oracle.neighbors(other);
      if (std::find(back.begin(), back.end(), node) == back.end()) {
        throw OracleError(oracle.describe() + ": asymmetric adjacency");
      }
    }
  }
  return result;
}

}  // namespace

std::size_t NodeHandleHash::operator()(const NodeHandle& h) const {
  return boost::hash_range(h.coords.begin(), h.coords.end());
}

BallReport ball(const LocalOracle& oracle, const NodeHandle& root, int radius,
                const ExplorationOptions& options) {
  if (radius < 0) throw UsageError("ball radius must be nonnegative");
  BallReport report;
  report.exhausted = true;
  std::unordered_map<NodeHandle, int, NodeHandleHash> distance{{root, 0}};
  std::deque<NodeHandle> queue{root};
  while (!queue.empty()) {
    NodeHandle node = std::move(queue.front());
    queue.pop_front();
    const int d = distance.at(node);
    report.radius_reached = std::max(report.radius_reached, d);
    const auto next = checked_neighbors(oracle, node, options);
    report.edges_queried += next.size();
    for (const auto& other : next) {
      if (distance.contains(other)) continue;
      // Nodes on the boundary layer are expanded only to learn whether the
      // component continues past the ball.
      if (d == radius) {
        report.exhausted = false;
        continue;
      }
      distance.emplace(other, d + 1);
      queue.push_back(other);
    }
  }
  report.size = distance.size();
  return report;
}

CappedComponent component_capped(const LocalOracle& oracle, const NodeHandle& root,
                                 std::size_t cap, const ExplorationOptions& options) {
  if (cap < 1) throw UsageError("component cap must be at least 1");
  CappedComponent result;
  if (cap == 1) return result;
  std::unordered_set<NodeHandle, NodeHandleHash> seen{root};
  std::deque<NodeHandle> queue{root};
  while (!queue.empty()) {
    NodeHandle node = std::move(queue.front());
    queue.pop_front();
    const auto next = checked_neighbors(oracle, node, options);
    result.edges_queried += next.size();
    for (const auto& other : next) {
      if (!seen.insert(other).second) continue;
      if (seen.size() >= cap) return result;
      queue.push_back(other);
    }
  }
  result.size = seen.size();
  return result;
}

}  // namespace cmrank
