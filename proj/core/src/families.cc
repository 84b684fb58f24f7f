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

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "cmrank/errors.h"
#include "cmrank/local_access.h"

namespace cmrank {
namespace {

class PathOracle final : public LocalOracle {
 public:
  int degree_bound() const override { return 2; }
  NodeHandle sample_root(RandomStream&) const override { return {{0}}; }
  std::vector<NodeHandle> neighbors(const NodeHandle& node) const override {
    const auto x = node.coords.at(0);
    return {{{x - 1}}, {{x + 1}}};
  }
  std::optional<Rational> known_total_rank() const override { return Rational(1); }
  std::string describe() const override { return "path"; }
};

class GridOracle final : public LocalOracle {
 public:
  explicit GridOracle(int dim) : dim_(dim) {
    if (dim < 1) throw UsageError("grid dimension must be at least 1");
  }
  int degree_bound() const override { return 2 * dim_; }
  NodeHandle sample_root(RandomStream&) const override {
    return {std::vector<std::int64_t>(static_cast<std::size_t>(dim_), 0)};
  }
  std::vector<NodeHandle> neighbors(const NodeHandle& node) const override {
    std::vector<NodeHandle> out;
    out.reserve(static_cast<std::size_t>(2 * dim_));
    for (int axis = 0; axis < dim_; ++axis) {
      for (int step : {-1, 1}) {
        NodeHandle next = node;
        next.coords.at(static_cast<std::size_t>(axis)) += step;
        out.push_back(std::move(next));
      }
    }
    return out;
  }
  std::optional<Rational> known_total_rank() const override { return Rational(1); }
  std::string describe() const override { return "grid:" + std::to_string(dim_); }

 private:
  int dim_;
};

// Nodes of the properly edge-colored degree-regular tree are reduced words
// over the colors (no color twice in a row): the colors along the path from
// the root. Following color c from word w appends c, or backtracks when w
// already ends in c.
class ColoredTreeOracle final : public LocalOracle {
 public:
  ColoredTreeOracle(int degree, std::vector<int> colors, bool full)
      : degree_(degree), colors_(std::move(colors)), full_(full) {
    if (degree < 0) throw UsageError("tree degree must be nonnegative");
    std::sort(colors_.begin(), colors_.end());
    if (std::adjacent_find(colors_.begin(), colors_.end()) != colors_.end()) {
      throw UsageError("duplicate color in colored tree");
    }
    for (int c : colors_) {
      if (c < 1 || c > degree) {
        throw UsageError("color " + std::to_string(c) + " outside 1.." + std::to_string(degree));
      }
    }
  }

  int degree_bound() const override { return static_cast<int>(colors_.size()); }
  NodeHandle sample_root(RandomStream&) const override { return {}; }

  std::vector<NodeHandle> neighbors(const NodeHandle& node) const override {
    std::vector<NodeHandle> out;
    out.reserve(colors_.size());
    for (int c : colors_) {
      NodeHandle next = node;
      if (!next.coords.empty() && next.coords.back() == c) {
        next.coords.pop_back();
      } else {
        next.coords.push_back(c);
      }
      out.push_back(std::move(next));
    }
    return out;
  }

  std::optional<Rational> known_total_rank() const override {
    switch (colors_.size()) {
      case 0:
        return Rational(0);
      case 1:
        return Rational(1, 2);  // perfect matching
      default:
        return Rational(1);
    }
  }

  std::string describe() const override {
    if (full_) return "tree:" + std::to_string(degree_);
    std::string out = "ctree:" + std::to_string(degree_) + ":";
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(colors_[i]);
    }
    return out;
  }

 private:
  int degree_;
  std::vector<int> colors_;
  bool full_;
};

class FiniteGraphOracle final : public LocalOracle {
 public:
  explicit FiniteGraphOracle(FiniteGraph g) : graph_(std::move(g)) {}
  int degree_bound() const override { return graph_.degree_bound(); }
  NodeHandle sample_root(RandomStream& rng) const override {
    return {{static_cast<std::int64_t>(rng.uniform(graph_.node_count()))}};
  }
  std::vector<NodeHandle> neighbors(const NodeHandle& node) const override {
    const auto v = node.coords.at(0);
    if (v < 0 || static_cast<std::size_t>(v) >= graph_.node_count()) {
      throw OracleError("node handle out of range");
    }
    std::vector<NodeHandle> out;
    for (const auto& inc : graph_.incidences(static_cast<int>(v))) out.push_back({{inc.neighbor}});
    return out;
  }
  std::optional<Rational> known_total_rank() const override { return total_rank_exact(graph_); }
  std::optional<std::vector<WeightedRoot>> root_distribution() const override {
    std::vector<WeightedRoot> out;
    const Rational share(1, static_cast<std::int64_t>(graph_.node_count()));
    for (std::size_t v = 0; v < graph_.node_count(); ++v) {
      out.push_back({{{static_cast<std::int64_t>(v)}}, share});
    }
    return out;
  }
  std::string describe() const override {
    return "graph(n=" + std::to_string(graph_.node_count()) +
           ",m=" + std::to_string(graph_.edge_count()) + ")";
  }

 private:
  FiniteGraph graph_;
};

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  const std::int64_t step = b / std::gcd(a, b);
  std::int64_t out;
  if (__builtin_mul_overflow(a, step, &out)) throw UsageError("mixture probabilities too fine-grained");
  return out;
}

class MixtureOracle final : public LocalOracle {
 public:
  MixtureOracle(std::vector<MixtureComponent> parts, bool allow_non_transitive)
      : parts_(std::move(parts)) {
    if (parts_.empty()) throw UsageError("mixture needs at least one component");
    Rational total(0);
    for (const auto& part : parts_) {
      if (part.probability < Rational(0)) throw UsageError("negative mixture probability");
      if (component_count(part.component, EdgeSet::all(part.component)) != 1) {
        throw UsageError("mixture component '" + part.name + "' is not connected");
      }
      if (!allow_non_transitive && !is_vertex_transitive(part.component)) {
        throw UsageError("mixture component '" + part.name + "' is not vertex-transitive");
      }
      degree_bound_ = std::max(degree_bound_, part.component.degree_bound());
      total += part.probability;
      denominator_ = lcm_checked(denominator_, part.probability.den());
    }
    if (total != Rational(1)) {
      throw UsageError("mixture probabilities sum to " + total.to_string() + ", expected 1");
    }
    for (const auto& part : parts_) {
      cumulative_.push_back((cumulative_.empty() ? 0 : cumulative_.back()) +
                            part.probability.num() * (denominator_ / part.probability.den()));
    }
  }

  int degree_bound() const override { return degree_bound_; }

  NodeHandle sample_root(RandomStream& rng) const override {
    const auto ticket = static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(denominator_)));
    const auto which = static_cast<std::size_t>(
        std::upper_bound(cumulative_.begin(), cumulative_.end(), ticket) - cumulative_.begin());
    const auto& g = parts_[which].component;
    return {{static_cast<std::int64_t>(which), static_cast<std::int64_t>(rng.uniform(g.node_count()))}};
  }

  std::vector<NodeHandle> neighbors(const NodeHandle& node) const override {
    const auto which = node.coords.at(0);
    const auto v = node.coords.at(1);
    if (which < 0 || static_cast<std::size_t>(which) >= parts_.size()) {
      throw OracleError("mixture handle out of range");
    }
    const auto& g = parts_[static_cast<std::size_t>(which)].component;
    std::vector<NodeHandle> out;
    for (const auto& inc : g.incidences(static_cast<int>(v))) out.push_back({{which, inc.neighbor}});
    return out;
  }

  std::optional<Rational> known_total_rank() const override {
    Rational expected_inverse(0);
    for (const auto& part : parts_) {
      expected_inverse += part.probability / Rational(static_cast<std::int64_t>(part.component.node_count()));
    }
    return Rational(1) - expected_inverse;
  }

  std::optional<std::vector<WeightedRoot>> root_distribution() const override {
    std::vector<WeightedRoot> out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      const auto n = static_cast<std::int64_t>(parts_[i].component.node_count());
      for (std::int64_t v = 0; v < n; ++v) {
        out.push_back({{{static_cast<std::int64_t>(i), v}}, parts_[i].probability / Rational(n)});
      }
    }
    return out;
  }

  std::string describe() const override {
    std::string out = "mixture:";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += parts_[i].name + "@" + parts_[i].probability.to_string();
    }
    return out;
  }

 private:
  std::vector<MixtureComponent> parts_;
  int degree_bound_ = 0;
  std::int64_t denominator_ = 1;
  std::vector<std::int64_t> cumulative_;
};

bool extend_automorphism(const FiniteGraph& g, std::vector<int>& image, std::vector<bool>& used,
                         int next) {
  const int n = static_cast<int>(g.node_count());
  if (next == n) return true;
  if (image[next] != -1) return extend_automorphism(g, image, used, next + 1);
  for (int candidate = 0; candidate < n; ++candidate) {
    if (used[candidate] || g.degree(candidate) != g.degree(next)) continue;
    bool consistent = true;
    for (int prev = 0; prev < n && consistent; ++prev) {
      if (image[prev] == -1 || prev == next) continue;
      const auto& a = g.incidences(next);
      const auto& b = g.incidences(candidate);
      const bool adj_src = std::any_of(a.begin(), a.end(), [&](const Incidence& i) { return i.neighbor == prev; });
      const bool adj_dst = std::any_of(b.begin(), b.end(), [&](const Incidence& i) { return i.neighbor == image[prev]; });
      consistent = adj_src == adj_dst;
    }
    if (!consistent) continue;
    image[next] = candidate;
    used[candidate] = true;
    if (extend_automorphism(g, image, used, next + 1)) return true;
    image[next] = -1;
    used[candidate] = false;
  }
  return false;
}

}  // namespace

OraclePtr infinite_path() { return std::make_shared<PathOracle>(); }

OraclePtr grid(int dim) { return std::make_shared<GridOracle>(dim); }

OraclePtr regular_tree(int degree) {
  std::vector<int> colors(static_cast<std::size_t>(std::max(degree, 0)));
  std::iota(colors.begin(), colors.end(), 1);
  return std::make_shared<ColoredTreeOracle>(degree, std::move(colors), true);
}

OraclePtr finite_graph_oracle(FiniteGraph g) { return std::make_shared<FiniteGraphOracle>(std::move(g)); }

OraclePtr component_mixture(std::vector<MixtureComponent> components, bool allow_non_transitive) {
  return std::make_shared<MixtureOracle>(std::move(components), allow_non_transitive);
}

OraclePtr colored_tree_subgraph(int degree, std::vector<int> colors) {
  return std::make_shared<ColoredTreeOracle>(degree, std::move(colors), false);
}

bool is_vertex_transitive(const FiniteGraph& g) {
  const int n = static_cast<int>(g.node_count());
  for (int target = 1; target < n; ++target) {
    // Map node 0 to target, then search for the rest. Node 0 is assigned
    // first so the search below never reassigns it.
    if (g.degree(0) != g.degree(target)) return false;
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    image[0] = target;
    used[static_cast<std::size_t>(target)] = true;
    if (!extend_automorphism(g, image, used, 1)) return false;
  }
  return true;
}

}  // namespace cmrank
