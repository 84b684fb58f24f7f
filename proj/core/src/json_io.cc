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

#include "cmrank/json_io.h"

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "cmrank/errors.h"

namespace cmrank::json_io {

using json = nlohmann::ordered_json;

json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_float()) return Rational::from_double(j.get<double>());
  } catch (const std::exception& e) {
    throw IoError(std::string("bad rational: ") + e.what());
  }
  throw IoError("expected a rational, got " + j.dump());
}

double round12(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::stod(buf);
}

json to_json(const Partition& p) {
  json weights = json::array();
  for (const auto& w : p.space()->weights()) weights.push_back(to_json(w));
  json classes = json::array();
  for (std::size_t c = 0; c < p.class_count(); ++c) classes.push_back(p.members(static_cast<int>(c)));
  return {{"weights", weights}, {"classes", classes}, {"infinite", p.infinite_classes()}};
}

Partition partition_from_json(const json& j) {
  try {
    std::vector<Rational> weights;
    for (const auto& w : j.at("weights")) weights.push_back(rational_from_json(w));
    auto space = WeightedSpace::make(std::move(weights));
    const auto classes = j.at("classes").get<std::vector<std::vector<int>>>();
    const auto infinite = j.value("infinite", std::vector<int>{});
    return Partition::from_classes(std::move(space), classes, infinite);
  } catch (const json::exception& e) {
    throw IoError(std::string("bad partition JSON: ") + e.what());
  } catch (const UsageError& e) {
    throw IoError(std::string("bad partition JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw IoError(std::string("bad partition JSON: ") + e.what());
  }
}

json to_json(const WeightedGraphing& wg) {
  json edges = json::array();
  for (const auto& e : wg.graph().edges()) edges.push_back({e.u, e.v});
  json weights = json::array();
  for (const auto& w : wg.weights()->weights()) weights.push_back(to_json(w));
  return {{"n", wg.graph().node_count()}, {"edges", edges}, {"weights", weights}};
}

WeightedGraphing graphing_from_json(const json& j, bool checked) {
  std::optional<FiniteGraph> g;
  SpacePtr space;
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw IoError("edge must be [u, v]");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    std::vector<Rational> weights;
    if (j.contains("weights")) {
      for (const auto& w : j.at("weights")) weights.push_back(rational_from_json(w));
    } else {
      weights.assign(n, Rational(1, static_cast<std::int64_t>(n)));
    }
    g.emplace(n, std::move(edges));
    space = WeightedSpace::make(std::move(weights));
  } catch (const json::exception& e) {
    throw IoError(std::string("bad graphing JSON: ") + e.what());
  } catch (const UsageError& e) {
    throw IoError(std::string("bad graphing JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw IoError(std::string("bad graphing JSON: ") + e.what());
  }
  if (!checked) return WeightedGraphing::unchecked(std::move(*g), std::move(space));
  return WeightedGraphing(std::move(*g), std::move(space));
}

json to_json(const MinorizingMeasure& alpha) {
  json out = json::array();
  for (const auto& w : alpha.edge_weights()) out.push_back(to_json(w));
  return out;
}

MinorizingMeasure measure_from_json(const json& j, const FiniteGraph& g) {
  if (!j.is_array()) throw IoError("measure must be a JSON array");
  std::vector<Rational> weights;
  for (const auto& w : j) weights.push_back(rational_from_json(w));
  try {
    return MinorizingMeasure(g, std::move(weights));
  } catch (const UsageError& e) {
    throw IoError(std::string("bad measure JSON: ") + e.what());
  }
}

json to_json(const Estimate& est, const std::string& family, const std::optional<Rational>& exact) {
  json out = {{"family", family},
              {"epsilon", round12(est.plan.epsilon)},
              {"k", est.plan.k},
              {"N", est.plan.samples},
              {"mode", std::string(to_string(est.plan.mode))},
              {"seed", est.seed},
              {"estimate", round12(est.value)},
              {"queries", est.queries}};
  if (exact) {
    out["exact"] = round12(exact->to_double());
    out["exact_rational"] = to_json(*exact);
  }
  return out;
}

}  // namespace cmrank::json_io
