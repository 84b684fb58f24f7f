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

#ifndef CMRANK_PARTITION_H_
#define CMRANK_PARTITION_H_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cmrank/rational.h"

namespace cmrank {

// A finite probability space: point i carries weight weights[i].
class WeightedSpace {
 public:
  // Throws PreconditionError unless every weight is >= 0 and they sum to 1.
  explicit WeightedSpace(std::vector<Rational> weights);

  static std::shared_ptr<const WeightedSpace> uniform(std::size_t point_count);
  static std::shared_ptr<const WeightedSpace> make(std::vector<Rational> weights);

  std::size_t point_count() const { return weights_.size(); }
  const Rational& weight(std::size_t point) const { return weights_[point]; }
  const std::vector<Rational>& weights() const { return weights_; }
  bool is_uniform() const;

  friend bool operator==(const WeightedSpace&, const WeightedSpace&) = default;

 private:
  std::vector<Rational> weights_;
};

using SpacePtr = std::shared_ptr<const WeightedSpace>;

// A partition of the points of a WeightedSpace. Classes carry an optional
// "infinite" flag: a flagged class stands for an infinite class of which only
// finitely many points are represented. It contributes 0 to psi and is left
// pointwise fixed by re-randomization.
//
// Class ids are canonical: numbered 0, 1, ... in order of first occurrence,
// so two partitions with the same classes and flags compare equal.
class Partition {
 public:
  // class_of[x] is an arbitrary label; labels are renumbered canonically and
  // infinite_labels refers to the caller's labels.
  Partition(SpacePtr space, const std::vector<int>& class_of,
            const std::vector<int>& infinite_labels = {});

  // Classes given as member lists (0-based points); infinite_classes indexes
  // into `classes`. Must cover every point exactly once.
  static Partition from_classes(SpacePtr space, const std::vector<std::vector<int>>& classes,
                                const std::vector<int>& infinite_classes = {});
  static Partition discrete(SpacePtr space);
  static Partition indiscrete(SpacePtr space, bool infinite = false);

  const SpacePtr& space() const { return space_; }
  std::size_t point_count() const { return class_of_.size(); }
  std::size_t class_count() const { return members_.size(); }

  int class_of(std::size_t point) const { return class_of_[point]; }
  const std::vector<int>& class_labels() const { return class_of_; }
  const std::vector<int>& members(int cls) const { return members_[cls]; }
  std::size_t class_size(int cls) const { return members_[cls].size(); }
  bool is_infinite(int cls) const { return infinite_[cls]; }
  bool has_infinite_classes() const;
  std::vector<int> infinite_classes() const;

  // Every class of *this lies inside a class of `coarser`, and every flagged
  // class of *this lies inside a flagged class of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b);

 private:
  SpacePtr space_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> members_;
  std::vector<bool> infinite_;
};

// A probability vector over the points of a space.
struct Distribution {
  SpacePtr space;
  std::vector<Rational> probability;

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.probability == b.probability;
  }
};

// Expected reciprocal class size of a random point: sum of pi(x)/|P_x| over
// points in unflagged classes.
Rational psi(const Partition& p);

// Finest common coarsening. A joined class is flagged iff it contains a
// flagged class of either input. Throws UsageError on different spaces.
Partition join(const Partition& p, const Partition& q);

// Pairwise intersections of classes. Throws PreconditionError if either
// input has flagged classes: the size of a finite piece of an infinite class
// is not determined by the model.
Partition meet(const Partition& p, const Partition& q);

// Law of v where u ~ pi and v is uniform in the class of u (v = u on flagged
// classes).
Distribution rerandomized_distribution(const Partition& p);

// True iff re-randomizing along p preserves pi. Both the fixpoint test and
// the "pi constant on every unflagged class" test are evaluated; a
// disagreement throws std::logic_error.
bool has_rerandomizing_property(const Partition& p);
bool weights_constant_on_finite_classes(const Partition& p);

// Sum of pi(x) f(x). Throws PreconditionError unless p is re-randomizing, f
// vanishes on flagged classes, and f sums to zero over every unflagged
// class. Under those conditions the result is always true.
bool check_rrand_zero_sum(const Partition& p, const std::vector<Rational>& f);

struct SupermodularReport {
  Rational psi_r;
  Rational psi_join;
  Rational psi_p;
  Rational psi_q;
  // psi(r) + psi(p v q) - psi(p) - psi(q).
  Rational slack;
  // Non-empty when the triple does not meet the preconditions; the
  // inequality is then not evaluated as a violation.
  std::vector<std::string> precondition_failures;

  bool preconditions_hold() const { return precondition_failures.empty(); }
  bool inequality_violated() const { return preconditions_hold() && slack < Rational(0); }
};

// psi(r) + psi(p v q) >= psi(p) + psi(q) for re-randomizing p, q, r with r
// refining both p and q.
SupermodularReport check_supermodular_triple(const Partition& p, const Partition& q,
                                             const Partition& r);

// Pointwise integrand 1/|R_x| + 1/|(P v Q)_x| - 1/|P_x| - 1/|Q_x| with flagged
// classes counting as 1/inf = 0. Summed against pi it equals the slack above.
Rational defect(const Partition& p, const Partition& q, const Partition& r, std::size_t point);

}  // namespace cmrank

#endif  // CMRANK_PARTITION_H_
