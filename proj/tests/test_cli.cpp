// Copyright 2026 The bicyclic authors
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

#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "bicyclic/element.hpp"
#include "cli.hpp"

namespace bicyclic::cli {
  namespace {

    struct Run {
      int         code = 0;
      std::string out;
      std::string err;
    };

    Run invoke(std::vector<std::string> const& args) {
      std::ostringstream out;
      std::ostringstream err;
      int                code = run(args, out, err);
      return {code, out.str(), err.str()};
    }

    TEST(Cli, Multiply) {
      auto r = invoke({"mul", "b^2a^3", "b^5a^1"});
      EXPECT_EQ(r.code, kExitOk);
      EXPECT_EQ(r.out, "b^4a^1\n");
    }

    TEST(Cli, MissingOperandIsUsageError) {
      auto r = invoke({"mul", "b^2a^3"});
      EXPECT_EQ(r.code, kExitUsage);
      EXPECT_TRUE(r.out.empty());
      EXPECT_FALSE(r.err.empty());
    }

    TEST(Cli, UnknownCommandAndBadGrammar) {
      EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
      EXPECT_EQ(invoke({}).code, kExitUsage);
      auto bad = invoke({"mul", "b^2x^3", "1"});
      EXPECT_EQ(bad.code, kExitUsage);
      EXPECT_NE(bad.err.find("error"), std::string::npos);
      EXPECT_EQ(invoke({"nbhd", "padic+:2", "b^3a^1"}).code, kExitUsage);
      EXPECT_EQ(invoke({"verify", "nothing"}).code, kExitUsage);
      EXPECT_EQ(invoke({"solve", "--side", "up", "1", "1"}).code, kExitUsage);
      EXPECT_EQ(invoke({"--format", "xml", "inv", "1"}).code, kExitUsage);
    }

    TEST(Cli, JsonShape) {
      auto r    = invoke({"--format", "json", "mul", "b^2a^3", "b^5a^1"});
      auto j    = nlohmann::json::parse(r.out);
      EXPECT_EQ(j["command"], "mul");
      EXPECT_EQ(j["result"]["k"], 4);
      EXPECT_EQ(j["result"]["l"], 1);
      auto late = invoke({"mul", "b^2a^3", "b^5a^1", "--format", "json"});
      EXPECT_EQ(late.out, r.out);
    }

    TEST(Cli, Solve) {
      EXPECT_EQ(invoke({"solve", "b^0a^1", "b^0a^1"}).out, "count: 2\nb^0a^0\nb^1a^1\n");
      EXPECT_EQ(invoke({"solve", "--side", "right", "b^1a^0", "b^0a^5"}).out,
                "count: 1\nb^0a^6\n");
    }

    TEST(Cli, SymbolicSets) {
      EXPECT_EQ(invoke({"nbhd", "padic+:2", "b^1a^3", "--idx", "2"}).out,
                "{b^1 a^(3+4t)}\n");
      EXPECT_EQ(invoke({"image", "--side", "right", "b^1a^1", "{b^0 a^(0+2t)}"}).out,
                "{b^1 a^1} ∪ {b^0 a^(2+2t)}\n");
      EXPECT_EQ(invoke({"product", "{b^0 a^(3+2t)}", "{b^1 a^(3+2t)}"}).out,
                "{b^0 a^(5+2t)}\n");
      EXPECT_EQ(invoke({"subset", "{b^0 a^(5+4t)}", "{b^0 a^(1+2t)}"}).out.substr(0, 5),
                "true\n");
      EXPECT_EQ(invoke({"product", "{b^(0+1t) a^0}", "{b^0 a^(0+1t)}"}).code, kExitUsage);
    }

    TEST(Cli, Continuity) {
      auto w = invoke({"find-discontinuity", "padic+:2", "--side", "right", "--bound", "4"});
      EXPECT_EQ(w.code, kExitOk);
      EXPECT_EQ(w.out.substr(0, 30), "s=b^1a^1 x=b^0a^0 t=1 Disconti");
      auto none = invoke({"find-discontinuity", "padic+:2", "--side", "left"});
      EXPECT_EQ(none.out, "none up to bound 4\n");
      auto cell = invoke({"check-shift", "padic+:2", "b^1a^2", "b^3a^4", "--t", "3"});
      EXPECT_EQ(cell.out, "s=b^1a^2 x=b^3a^4 t=3 ContinuousAt k(3)=3\n");
      EXPECT_EQ(invoke({"check-shift", "padic+:2", "b^1a^2"}).code, kExitUsage);
    }

    TEST(Cli, VerifyProp2) {
      auto r = invoke({"verify", "prop2", "--p", "2", "--m", "0", "--n", "2", "--bound", "6"});
      EXPECT_EQ(r.code, kExitOk);
      EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
    }

    TEST(Cli, Deterministic) {
      std::vector<std::string> args{"--format", "json", "check-shift", "padic+:3",
                                    "--side", "right", "--bound", "3", "--t", "2"};
      EXPECT_EQ(invoke(args).out, invoke(args).out);
      auto serial = args;
      serial.push_back("--serial");
      EXPECT_EQ(invoke(serial).out, invoke(args).out);
    }

    TEST(Cli, PrintedElementsReparse) {
      auto r = invoke({"enumerate", "cplus-window:1:2", "--bound", "4"});
      std::istringstream lines(r.out);
      std::string        line;
      std::getline(lines, line);
      EXPECT_EQ(line, "count: 7");
      while (std::getline(lines, line)) {
        EXPECT_EQ(to_string(parse_element(line)), line);
      }
    }

  }  // namespace
}  // namespace bicyclic::cli
