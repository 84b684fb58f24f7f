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

#include "cli.h"

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace cmrank::cli {
namespace {

const std::string kData = CMRANK_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

TEST(CliTest, RankOnTriangle) {
  auto r = invoke({"rank", "--input", kData + "/k3.el"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(parse(r), nlohmann::json::parse(R"({"rho":"2/3","rank":2,"components":1})"));
  auto s = invoke({"rank", "--input", kData + "/k3.el", "--subset", kData + "/k3_two.idx"});
  ASSERT_EQ(s.code, kOk) << s.err;
  EXPECT_EQ(parse(s)["rho"], "2/3");
}

TEST(CliTest, EstimateTriangles) {
  auto r = invoke({"estimate", "--family", "mixture:triangle@1.0", "--epsilon", "0.2", "--seed", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = parse(r);
  EXPECT_DOUBLE_EQ(j["estimate"].get<double>(), 0.666666666667);
  EXPECT_EQ(j["k"], 10);
  EXPECT_EQ(j["N"], 116);
  EXPECT_EQ(j["mode"], "cap");
  EXPECT_EQ(j["exact"].get<double>(), 0.666666666667);
}

TEST(CliTest, EstimateIsByteIdenticalAcrossThreads) {
  auto a = invoke({"estimate", "--family", "mixture:triangle@0.5,square@0.5", "--seed", "9"});
  auto b = invoke({"estimate", "--family", "mixture:triangle@0.5,square@0.5", "--seed", "9",
                   "--threads", "4"});
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, ExperimentNonadd) {
  auto r = invoke({"experiment", "nonadd", "--degree", "5", "--r", "3", "--epsilon", "0.1",
                   "--seed", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = parse(r);
  EXPECT_DOUBLE_EQ(j["sum"].get<double>(), 2.0);
  EXPECT_DOUBLE_EQ(j["paper_bound"].get<double>(), 1.33333333333);
  EXPECT_EQ(j["bound_rational"], "4/3");
  EXPECT_EQ(invoke({"experiment", "nonadd", "--degree", "1", "--r", "1"}).code, kUsage);
}

TEST(CliTest, ConvergeCsv) {
  auto r = invoke({"converge", "--family", "cycle", "--sizes", "10,100", "--epsilon", "0.5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.rfind("size,exact,estimate,abs_error,queries\n10,0.9,", 0), 0u) << r.out;
}

TEST(CliTest, Checks) {
  for (const char* kind : {"submodular", "supermod", "sandwich", "rerand"}) {
    auto r = invoke({"check", kind, "--trials", "50", "--seed", "3"});
    ASSERT_EQ(r.code, kOk) << kind << ": " << r.err;
    EXPECT_EQ(parse(r)["violations"], 0) << kind;
  }
}

TEST(CliTest, Minorize) {
  auto r = invoke({"minorize", "--input", kData + "/k3.el", "--order", "given"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.find("\"1/3\",\"1/3\",\"0/1\"") != std::string::npos, true) << r.out;
  auto f = invoke({"minorize", "--input", kData + "/p4.el", "--forest"});
  ASSERT_EQ(f.code, kOk) << f.err;
  auto bad = invoke({"minorize", "--input", kData + "/k3.el", "--measure", kData + "/k3_heavy.json"});
  EXPECT_EQ(bad.code, kViolation) << bad.out << bad.err;
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"estimate", "--family", "tree:3", "--epsilon", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"estimate", "--family", "nonsense"}).code, kUsage);
  EXPECT_EQ(invoke({"rank", "--input", kData + "/missing.el"}).code, kIo);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

}  // namespace
}  // namespace cmrank::cli
