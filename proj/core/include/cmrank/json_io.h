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

#ifndef CMRANK_JSON_IO_H_
#define CMRANK_JSON_IO_H_

#include <nlohmann/json.hpp>

#include "cmrank/graphing.h"
#include "cmrank/minorize.h"
#include "cmrank/partition.h"
#include "cmrank/rank_estimator.h"
#include "cmrank/rational.h"

namespace cmrank::json_io {

// Rationals are written as "p/q" strings. Readers also accept JSON integers,
// JSON floats (taken as their shortest decimal) and decimal strings.
nlohmann::ordered_json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::ordered_json& j);

// Doubles rounded to 12 significant digits.
double round12(double value);

// {"weights":[...], "classes":[[ids]...], "infinite":[class-ids]}
nlohmann::ordered_json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::ordered_json& j);

// {"n":..., "edges":[[u,v]...], "weights":[...]}; weights default to
// uniform. With `checked` the measure-preservation check runs on load.
nlohmann::ordered_json to_json(const WeightedGraphing& wg);
WeightedGraphing graphing_from_json(const nlohmann::ordered_json& j, bool checked = true);

// Array of "p/q", one per edge.
nlohmann::ordered_json to_json(const MinorizingMeasure& alpha);
MinorizingMeasure measure_from_json(const nlohmann::ordered_json& j, const FiniteGraph& g);

// {"family", "epsilon", "k", "N", "mode", "seed", "estimate", "queries",
//  "exact"?}. wall_seconds is left out so equal inputs give equal bytes.
nlohmann::ordered_json to_json(const Estimate& est, const std::string& family,
                       const std::optional<Rational>& exact);

}  // namespace cmrank::json_io

#endif  // CMRANK_JSON_IO_H_
