// Copyright 2026 The mixkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace mixkit::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MIXKIT_TEST_DATA_DIR) + "/" + name; }

TEST(Cli, BentSupportMixesAtQuarterPi) {
  const Outcome r = invoke({"mix", "--group", "Z2^4", "--set", data("z2_4_bent.set"), "--time", "1/8"});
  EXPECT_EQ(r.code, kExitTrue) << r.err;
  EXPECT_NE(r.out.find("verdict    true"), std::string::npos) << r.out;
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, Z5Z3FailsWithShift) {
  const Outcome r =
      invoke({"mix", "--group", "Z5xZ3", "--set", data("z5xz3_orbits.set"), "--time", "1/8", "--json"});
  EXPECT_EQ(r.code, kExitFalse);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["verdict"], false);
  EXPECT_EQ(doc["mode"], "exact");
  EXPECT_EQ(doc["failing_h"], "(0,1)");
  const auto& shifts = doc["failing_shifts"];
  EXPECT_NE(std::find(shifts.begin(), shifts.end(), "(1,0)"), shifts.end());
  EXPECT_EQ(doc["time"], (nlohmann::json{{"N", 8}, {"r", 1}}));
  for (const auto& e : doc["evidence"]) {
    EXPECT_TRUE(e.contains("value_exact"));
    EXPECT_EQ(e["value_exact"]["level"], 8);
  }
}

TEST(Cli, Z9SpectrumTable) {
  const Outcome r = invoke({"spectrum", "--group", "Z9", "--set", "orbits: 1"});
  EXPECT_EQ(r.code, kExitTrue);
  const char* want = "(0)\t6\n(1)\t0\n(2)\t0\n(3)\t-3\n(4)\t0\n(5)\t0\n(6)\t-3\n(7)\t0\n(8)\t0\n";
  EXPECT_NE(r.out.find(want), std::string::npos) << r.out;
  const auto doc = nlohmann::json::parse(invoke({"spectrum", "-g", "Z9", "-s", "orbits: 1", "--json"}).out);
  EXPECT_EQ(doc["eigenvalues"][3]["lambda"], -3);
  EXPECT_EQ(doc["gcd_invariants"]["D_G"], 3);
}

TEST(Cli, FloatTimeSelectsFloatMode) {
  const Outcome r = invoke(
      {"mix", "-g", "Z2^4", "-s", data("z2_4_bent.set"), "-t", "t=0.7853981633974483", "--json"});
  EXPECT_EQ(r.code, kExitTrue);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["mode"], "float");
  EXPECT_EQ(doc["certifying"], false);
  EXPECT_TRUE(doc["time"].contains("float"));
  EXPECT_TRUE(doc["evidence"][0].contains("value_re"));
}

TEST(Cli, JsonIsByteStable) {
  const std::vector<std::vector<std::string>> commands{
      {"mix", "-g", "Z2^3", "-s", data("z2_3_odd_ext.set"), "-t", "1/8", "--json"},
      {"times", "-g", "Z2xZ4", "-s", data("z2xz4.set"), "--json"},
      {"search", "-g", "Z2^3", "--json"},
      {"classify", "-g", "Z3^2", "--json"},
      {"spectrum", "-g", "Z5xZ3", "-s", data("z5xz3_orbits.set"), "--json"},
      {"bent", "wht", "--anf", "x1*x2+x3*x4", "--json"},
  };
  for (auto args : commands) {
    const Outcome a = invoke(args);
    const Outcome b = invoke(args);
    args.push_back("--threads");
    args.push_back("4");
    const Outcome c = invoke(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_TRUE(nlohmann::json::accept(a.out)) << a.out;
  }
}

TEST(Cli, ErrorsExitTwo) {
  Outcome r = invoke({"mix", "-g", "Z4", "-s", "1", "-t", "1/8"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("NotSymmetric"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
  r = invoke({"mix", "-g", "Z1xZ2", "-s", "1", "-t", "1/8"});
  EXPECT_EQ(r.code, kExitError);
  r = invoke({"frobnicate"});
  EXPECT_EQ(r.code, kExitError);
  r = invoke({"times", "-g", "Z5", "-s", "1;4"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("NotIntegral"), std::string::npos) << r.err;
  r = invoke({"bent", "dual", "--anf", "x1"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("NotBent"), std::string::npos) << r.err;
  r = invoke({"mix", "-g", "Z4", "-s", data("missing.set"), "-t", "1/8"});
  EXPECT_EQ(r.code, kExitError);
}

TEST(Cli, Predicates) {
  EXPECT_EQ(invoke({"classify", "-g", "Z2xZ4"}).code, kExitTrue);
  EXPECT_EQ(invoke({"classify", "-g", "Z9"}).code, kExitFalse);
  EXPECT_EQ(invoke({"bent", "is-bent", "--anf", "x1*x2+x3*x4"}).code, kExitTrue);
  EXPECT_EQ(invoke({"bent", "is-bent", "--hex", "80"}).code, kExitFalse);
  EXPECT_EQ(invoke({"bent", "cubelike", "--anf", "x1*x2+x3*x4"}).code, kExitTrue);
  EXPECT_EQ(invoke({"bent", "odd-ext", "--anf", "x1*x2+x3*x4", "--time", "1/16"}).code, kExitFalse);
  EXPECT_EQ(invoke({"bent", "odd-ext", "--anf", "x1*x2", "--time", "1/8"}).code, kExitTrue);
  EXPECT_EQ(invoke({"mix", "-g", "Z2xZ4", "-s", data("z2xz4.set"), "-t", "1/8", "--hadamard"}).code,
            kExitTrue);
}

TEST(Cli, OtherCommands) {
  Outcome r = invoke({"orbits", "-g", "Z9"});
  EXPECT_EQ(r.code, kExitTrue);
  EXPECT_NE(r.out.find("(1) (2) (4) (5) (7) (8)"), std::string::npos);
  r = invoke({"times", "-g", "Z2", "-s", "1"});
  EXPECT_NE(r.out.find("1/8 3/8 5/8 7/8"), std::string::npos) << r.out;
  r = invoke({"search", "-g", "Z4", "--json"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["sets_examined"], 2);
  r = invoke({"verify", "--order-cap", "8"});
  EXPECT_EQ(r.code, kExitTrue);
  EXPECT_NE(r.out.find("all_agree true"), std::string::npos);
  r = invoke({"bent", "mm", "--k", "2", "--perm", "0,1,2,3"});
  EXPECT_NE(r.out.find("0ac6"), std::string::npos);
  r = invoke({"bent", "support", "--anf", "x1*x2+x3*x4", "--json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["set"].size(), 6u);
  r = invoke({"search", "-g", "Z64"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("GroupTooLarge"), std::string::npos);
}

}  // namespace
}  // namespace mixkit::cli
