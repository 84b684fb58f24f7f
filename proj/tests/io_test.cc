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

#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cmrank/edge_list_io.h"
#include "cmrank/errors.h"
#include "cmrank/generators.h"
#include "cmrank/graphing.h"
#include "cmrank/json_io.h"
#include "cmrank/minorize.h"
#include "cmrank/random.h"
#include "cmrank/random_instances.h"

namespace cmrank {
namespace {

TEST(EdgeListTest, ParsesCommentsAndHeader) {
  std::istringstream in("# comment\nn 5\n0 1  # trailing\n\n3 4\n");
  auto g = read_edge_list(in);
  EXPECT_EQ(g.node_count(), 5u);
  EXPECT_EQ(g.edge_count(), 2u);
  std::istringstream bare("0 1\n1 2\n");
  EXPECT_EQ(read_edge_list(bare).node_count(), 3u);
}

TEST(EdgeListTest, Errors) {
  std::istringstream junk("0 x\n");
  EXPECT_THROW(read_edge_list(junk), IoError);
  std::istringstream loop("1 1\n");
  EXPECT_THROW(read_edge_list(loop), IoError);
  std::istringstream empty("");
  EXPECT_THROW(read_edge_list(empty), IoError);
  EXPECT_THROW(read_edge_list(std::filesystem::path("/nonexistent/g.el")), IoError);
}

TEST(EdgeListTest, RoundTrip) {
  RandomStream rng(1);
  for (int t = 0; t < 50; ++t) {
    auto g = generators::random_graph(1 + rng.uniform(20), 0.3, rng);
    std::stringstream buf;
    write_edge_list(buf, g);
    auto h = read_edge_list(buf);
    EXPECT_EQ(h.node_count(), g.node_count());
    EXPECT_EQ(h.edges(), g.edges());
    auto x = random_instances::random_edge_subset(g, rng);
    std::stringstream sb;
    write_edge_set(sb, x);
    EXPECT_EQ(read_edge_set(sb, g).indices(), x.indices());
  }
}

TEST(EdgeSetIoTest, RejectsOutOfRange) {
  auto g = generators::cycle(3);
  std::istringstream in("0\n3\n");
  EXPECT_THROW(read_edge_set(in, g), IoError);
}

TEST(JsonTest, Rationals) {
  EXPECT_EQ(json_io::to_json(Rational(2, 3)), "2/3");
  EXPECT_EQ(json_io::rational_from_json(nlohmann::ordered_json("3/4")), Rational(3, 4));
  EXPECT_EQ(json_io::rational_from_json(nlohmann::ordered_json(2)), Rational(2));
  EXPECT_EQ(json_io::rational_from_json(nlohmann::ordered_json(0.25)), Rational(1, 4));
  EXPECT_DOUBLE_EQ(json_io::round12(2.0 / 3.0), 0.666666666667);
}

TEST(JsonTest, PartitionRoundTrip) {
  RandomStream rng(2);
  for (int t = 0; t < 100; ++t) {
    auto s = random_instances::random_level_space(1 + rng.uniform(8), rng);
    auto p = random_instances::random_partition(s, rng);
    auto j = json_io::to_json(p);
    auto back = json_io::partition_from_json(nlohmann::ordered_json::parse(j.dump()));
    EXPECT_EQ(back, p);
    EXPECT_EQ(*back.space(), *p.space());
  }
}

TEST(JsonTest, GraphingRoundTripAndValidation) {
  RandomStream rng(3);
  for (int t = 0; t < 50; ++t) {
    auto g = generators::random_graph(1 + rng.uniform(10), 0.4, rng);
    WeightedGraphing wg(g, random_instances::random_component_weights(g, rng));
    auto back = json_io::graphing_from_json(nlohmann::ordered_json::parse(json_io::to_json(wg).dump()));
    EXPECT_EQ(back.graph().edges(), g.edges());
    EXPECT_EQ(*back.weights(), *wg.weights());
  }
  auto bad = nlohmann::ordered_json::parse(R"({"n":2,"edges":[[0,1]],"weights":["1/3","2/3"]})");
  EXPECT_THROW(json_io::graphing_from_json(bad), PreconditionError);
  EXPECT_NO_THROW(json_io::graphing_from_json(bad, false));
  EXPECT_THROW(json_io::graphing_from_json(nlohmann::ordered_json::parse(R"({"edges":3})")), IoError);
}

TEST(JsonTest, MeasureRoundTrip) {
  auto k3 = generators::complete(3);
  auto a = greedy_minorizer(k3, ChainOrder::identity(k3));
  auto j = json_io::to_json(a);
  EXPECT_EQ(j.dump(), R"(["1/3","1/3","0/1"])");
  EXPECT_EQ(json_io::measure_from_json(j, k3), a);
}

}  // namespace
}  // namespace cmrank
