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

#include "cmrank/partition.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "cmrank/errors.h"

namespace cmrank {
namespace {

void require_same_space(const Partition& a, const Partition& b) {
  if (a.space() != b.space() && *a.space() != *b.space()) {
    throw UsageError("partitions live on different spaces");
  }
}

// Inverse class size with 1/inf = 0.
Rational inverse_size(const Partition& p, std::size_t point) {
  const int cls = p.class_of(point);
  if (p.is_infinite(cls)) return Rational(0);
  return Rational(1, static_cast<std::int64_t>(p.class_size(cls)));
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

WeightedSpace::WeightedSpace(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw PreconditionError("weighted space needs at least one point");
  Rational total(0);
  for (const auto& w : weights_) {
    if (w < Rational(0)) throw PreconditionError("negative weight " + w.to_string());
    total += w;
  }
  if (total != Rational(1)) {
    throw PreconditionError("weights sum to " + total.to_string() + ", expected 1");
  }
}

SpacePtr WeightedSpace::uniform(std::size_t point_count) {
  if (point_count == 0) throw PreconditionError("weighted space needs at least one point");
  return std::make_shared<const WeightedSpace>(
      std::vector<Rational>(point_count, Rational(1, static_cast<std::int64_t>(point_count))));
}

SpacePtr WeightedSpace::make(std::vector<Rational> weights) {
  return std::make_shared<const WeightedSpace>(std::move(weights));
}

bool WeightedSpace::is_uniform() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [&](const Rational& w) { return w == weights_.front(); });
}

Partition::Partition(SpacePtr space, const std::vector<int>& class_of,
                     const std::vector<int>& infinite_labels)
    : space_(std::move(space)) {
  if (!space_) throw UsageError("partition needs a space");
  if (class_of.size() != space_->point_count()) {
    throw UsageError("class assignment covers " + std::to_string(class_of.size()) +
                     " points, space has " + std::to_string(space_->point_count()));
  }
  std::unordered_map<int, int> canonical;
  class_of_.resize(class_of.size());
  for (std::size_t x = 0; x < class_of.size(); ++x) {
    auto [it, inserted] = canonical.try_emplace(class_of[x], static_cast<int>(members_.size()));
    if (inserted) members_.emplace_back();
    class_of_[x] = it->second;
    members_[it->second].push_back(static_cast<int>(x));
  }
  infinite_.assign(members_.size(), false);
  for (int label : infinite_labels) {
    auto it = canonical.find(label);
    if (it == canonical.end()) {
      throw UsageError("infinite flag refers to unknown class " + std::to_string(label));
    }
    infinite_[it->second] = true;
  }
}

Partition Partition::from_classes(SpacePtr space, const std::vector<std::vector<int>>& classes,
                                  const std::vector<int>& infinite_classes) {
  if (!space) throw UsageError("partition needs a space");
  const auto n = space->point_count();
  std::vector<int> class_of(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw UsageError("empty class " + std::to_string(c));
    for (int x : classes[c]) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw UsageError("point " + std::to_string(x) + " out of range");
      }
      if (class_of[x] != -1) throw UsageError("point " + std::to_string(x) + " in two classes");
      class_of[x] = static_cast<int>(c);
    }
  }
  if (std::find(class_of.begin(), class_of.end(), -1) != class_of.end()) {
    throw UsageError("classes do not cover every point");
  }
  for (int c : infinite_classes) {
    if (c < 0 || static_cast<std::size_t>(c) >= classes.size()) {
      throw UsageError("infinite flag refers to unknown class " + std::to_string(c));
    }
  }
  return Partition(std::move(space), class_of, infinite_classes);
}

Partition Partition::discrete(SpacePtr space) {
  std::vector<int> labels(space->point_count());
  std::iota(labels.begin(), labels.end(), 0);
  return Partition(std::move(space), labels);
}

Partition Partition::indiscrete(SpacePtr space, bool infinite) {
  std::vector<int> labels(space->point_count(), 0);
  return Partition(std::move(space), labels, infinite ? std::vector<int>{0} : std::vector<int>{});
}

bool Partition::has_infinite_classes() const {
  return std::find(infinite_.begin(), infinite_.end(), true) != infinite_.end();
}

std::vector<int> Partition::infinite_classes() const {
  std::vector<int> out;
  for (std::size_t c = 0; c < infinite_.size(); ++c) {
    if (infinite_[c]) out.push_back(static_cast<int>(c));
  }
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  require_same_space(*this, coarser);
  for (std::size_t c = 0; c < members_.size(); ++c) {
    const int target = coarser.class_of(members_[c].front());
    for (int x : members_[c]) {
      if (coarser.class_of(x) != target) return false;
    }
    if (infinite_[c] && !coarser.is_infinite(target)) return false;
  }
  return true;
}

bool operator==(const Partition& a, const Partition& b) {
  return *a.space_ == *b.space_ && a.class_of_ == b.class_of_ && a.infinite_ == b.infinite_;
}

Rational psi(const Partition& p) {
  Rational total(0);
  const auto& space = *p.space();
  for (std::size_t x = 0; x < p.point_count(); ++x) {
    total += space.weight(x) * inverse_size(p, x);
  }
  return total;
}

Partition join(const Partition& p, const Partition& q) {
  require_same_space(p, q);
  const auto n = p.point_count();
  DisjointSets sets(n);
  for (const Partition* part : {&p, &q}) {
    for (std::size_t c = 0; c < part->class_count(); ++c) {
      const auto& m = part->members(static_cast<int>(c));
      for (int x : m) sets.unite(m.front(), x);
    }
  }
  std::vector<int> labels(n);
  std::vector<int> flagged;
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = sets.find(static_cast<int>(x));
    if (p.is_infinite(p.class_of(x)) || q.is_infinite(q.class_of(x))) flagged.push_back(labels[x]);
  }
  std::sort(flagged.begin(), flagged.end());
  flagged.erase(std::unique(flagged.begin(), flagged.end()), flagged.end());
  return Partition(p.space(), labels, flagged);
}

Partition meet(const Partition& p, const Partition& q) {
  require_same_space(p, q);
  if (p.has_infinite_classes() || q.has_infinite_classes()) {
    throw PreconditionError("meet is undefined for partitions with infinite classes");
  }
  const auto n = p.point_count();
  const auto stride = static_cast<int>(q.class_count());
  std::vector<int> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = p.class_of(x) * stride + q.class_of(x);
  return Partition(p.space(), labels);
}

Distribution rerandomized_distribution(const Partition& p) {
  const auto& space = *p.space();
  Distribution out{p.space(), std::vector<Rational>(p.point_count())};
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    const auto& m = p.members(static_cast<int>(c));
    if (p.is_infinite(static_cast<int>(c))) {
      for (int x : m) out.probability[x] = space.weight(x);
      continue;
    }
    Rational mass(0);
    for (int x : m) mass += space.weight(x);
    const Rational share = mass / Rational(static_cast<std::int64_t>(m.size()));
    for (int x : m) out.probability[x] = share;
  }
  return out;
}

bool weights_constant_on_finite_classes(const Partition& p) {
  const auto& space = *p.space();
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    if (p.is_infinite(static_cast<int>(c))) continue;
    const auto& m = p.members(static_cast<int>(c));
    for (int x : m) {
      if (space.weight(x) != space.weight(m.front())) return false;
    }
  }
  return true;
}

bool has_rerandomizing_property(const Partition& p) {
  const bool fixpoint = rerandomized_distribution(p).probability == p.space()->weights();
  if (fixpoint != weights_constant_on_finite_classes(p)) {
    throw std::logic_error("re-randomizing criteria disagree");
  }
  return fixpoint;
}

bool check_rrand_zero_sum(const Partition& p, const std::vector<Rational>& f) {
  if (f.size() != p.point_count()) throw UsageError("f must have one value per point");
  if (!has_rerandomizing_property(p)) {
    throw PreconditionError("partition lacks the re-randomizing property");
  }
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    Rational class_sum(0);
    for (int x : p.members(static_cast<int>(c))) class_sum += f[x];
    if (p.is_infinite(static_cast<int>(c))) {
      for (int x : p.members(static_cast<int>(c))) {
        if (!f[x].is_zero()) throw PreconditionError("f must vanish on infinite classes");
      }
    } else if (!class_sum.is_zero()) {
      throw PreconditionError("f sums to " + class_sum.to_string() + " on class " +
                              std::to_string(c));
    }
  }
  Rational total(0);
  for (std::size_t x = 0; x < f.size(); ++x) total += p.space()->weight(x) * f[x];
  return total.is_zero();
}

SupermodularReport check_supermodular_triple(const Partition& p, const Partition& q,
                                             const Partition& r) {
  require_same_space(p, q);
  require_same_space(p, r);
  SupermodularReport report;
  if (!r.refines(p)) report.precondition_failures.push_back("r does not refine p");
  if (!r.refines(q)) report.precondition_failures.push_back("r does not refine q");
  if (!has_rerandomizing_property(p)) report.precondition_failures.push_back("p is not re-randomizing");
  if (!has_rerandomizing_property(q)) report.precondition_failures.push_back("q is not re-randomizing");
  if (!has_rerandomizing_property(r)) report.precondition_failures.push_back("r is not re-randomizing");
  report.psi_r = psi(r);
  report.psi_join = psi(join(p, q));
  report.psi_p = psi(p);
  report.psi_q = psi(q);
  report.slack = report.psi_r + report.psi_join - report.psi_p - report.psi_q;
  return report;
}

Rational defect(const Partition& p, const Partition& q, const Partition& r, std::size_t point) {
  require_same_space(p, q);
  require_same_space(p, r);
  if (point >= p.point_count()) throw UsageError("point out of range");
  const Partition joined = join(p, q);
  return inverse_size(r, point) + inverse_size(joined, point) - inverse_size(p, point) -
         inverse_size(q, point);
}

}  // namespace cmrank
