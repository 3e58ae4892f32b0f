// Copyright 2026 The mcpaths Authors
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

#include "mcpaths/cli_io.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "test_graphs.hpp"

namespace mcpaths {
namespace {

using ::testing::HasSubstr;

constexpr const char* kWorkedLine =
    "# line graph\n"
    "mcgraph undirected 5 3\n"
    "0 1 3 4 5   # A-B\n"
    "1 2 4 3 2\n"
    "\n"
    "2 3 1 6 5\n"
    "3 4 4 7 2\n";

constexpr const char* kTwoRoutes =
    "mcgraph directed 4 2\n"
    "0 1 1 1\n"
    "1 3 1 1\n"
    "0 2 1 1\n"
    "2 3 1 1\n";

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_graph_file(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

TEST(ParseGraphFileTest, WorkedLine) {
  const Graph g = parse_graph_file(kWorkedLine);
  EXPECT_FALSE(g.directed());
  EXPECT_EQ(g.node_count(), 5u);
  EXPECT_EQ(g.criteria_count(), 3u);
  ASSERT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.edge(2).weights, (CriteriaVector{1, 6, 5}));
  EXPECT_EQ(g.edge(3).id, 3u);
}

TEST(ParseGraphFileTest, CrLfAndTrailingNewlines) {
  const Graph g = parse_graph_file("mcgraph directed 2 1\r\n0 1 7\r\n\r\n");
  EXPECT_TRUE(g.directed());
  EXPECT_EQ(g.edge(0).weights, CriteriaVector{7});
}

TEST(ParseGraphFileTest, ErrorLines) {
  EXPECT_EQ(parse_error_line(""), 1u);
  EXPECT_EQ(parse_error_line("graph directed 2 1\n"), 1u);
  EXPECT_EQ(parse_error_line("mcgraph sideways 2 1\n"), 1u);
  EXPECT_EQ(parse_error_line("mcgraph directed 2\n"), 1u);
  EXPECT_EQ(parse_error_line("mcgraph directed 2 1\n0 1\n"), 2u);
  EXPECT_EQ(parse_error_line("mcgraph directed 2 1\n0 1 -3\n"), 2u);
  EXPECT_EQ(parse_error_line("mcgraph directed 2 1\n0 1 x\n"), 2u);
  EXPECT_EQ(parse_error_line("mcgraph directed 2 1\n0 1 99999999999999999999\n"), 2u);
  EXPECT_EQ(parse_error_line("mcgraph directed 2 1\n# c\n0 1 1\n1 5 1\n"), 4u);
  EXPECT_EQ(parse_error_line("mcgraph directed 2 1\n0 1 1\n\n0 1 2\n"), 4u);
  EXPECT_EQ(parse_error_line("mcgraph undirected 2 1\n0 0 1\n"), 2u);
}

TEST(ParseGraphFileTest, MessagesNameTheProblem) {
  try {
    parse_graph_file("mcgraph directed 2 1\n0 1 -3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_THAT(e.what(), HasSubstr("negative"));
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(FormatGraphFileTest, RoundTrip) {
  std::mt19937_64 rng(71);
  for (const Directedness d : {Directedness::kDirected, Directedness::kUndirected}) {
    testing::RandomGraphSpec spec;
    spec.directedness = d;
    for (int trial = 0; trial < 50; ++trial) {
      const Graph g = testing::random_graph(rng, spec);
      const std::string text = format_graph_file(g);
      const Graph h = parse_graph_file(text);
      EXPECT_EQ(format_graph_file(h), text);
      EXPECT_EQ(h.edge_count(), g.edge_count());
      EXPECT_EQ(h.directed(), g.directed());
    }
  }
}

class RunCliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("mcpaths_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  std::filesystem::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(RunCliTest, Pack) {
  const std::string g = write("t1.mcg", kWorkedLine);
  EXPECT_EQ(run({"pack", "--graph", g}), kExitOk);
  EXPECT_THAT(out_.str(), HasSubstr("W=(12,20,14) l=(4,5,4) r=(9,4,0)"));
  for (const char* v : {"1605", "2098", "613", "2162"}) {
    EXPECT_THAT(out_.str(), HasSubstr(std::string("ensembled=") + v));
  }
}

TEST_F(RunCliTest, ShortestPathJson) {
  const std::string g = write("t1.mcg", kWorkedLine);
  ASSERT_EQ(run({"--format", "json", "--verify", "sp", "--graph", g, "--source", "0",
                 "--dest", "4"}),
            kExitOk);
  const auto doc = nlohmann::json::parse(out_.str());
  EXPECT_EQ(doc["status"], "ok");
  EXPECT_EQ(doc["paths"][0]["ensembled_length"], "6478");
  EXPECT_EQ(doc["paths"][0]["criteria"], nlohmann::json({12, 20, 14}));
  EXPECT_EQ(doc["paths"][0]["nodes"], nlohmann::json({0, 1, 2, 3, 4}));
  EXPECT_EQ(doc["verify"]["agrees"], true);
}

TEST_F(RunCliTest, KspExhausted) {
  const std::string g = write("t1.mcg", kWorkedLine);
  ASSERT_EQ(run({"--format", "json", "ksp", "--graph", g, "--source", "0", "--dest", "4",
                 "-k", "2"}),
            kExitOk);
  const auto doc = nlohmann::json::parse(out_.str());
  EXPECT_EQ(doc["paths"].size(), 1u);
  EXPECT_EQ(doc["exhausted"], true);
}

TEST_F(RunCliTest, ThresholdLeavesNoPath) {
  const std::string g = write("t1.mcg", kWorkedLine);
  EXPECT_EQ(run({"sp", "--graph", g, "--source", "0", "--dest", "4", "--threshold", "2162"}),
            kExitNoPaths);
  EXPECT_EQ(run({"sp", "--graph", g, "--source", "0", "--dest", "4", "--threshold",
                 "123456789012345678901234567890"}),
            kExitOk);
}

TEST_F(RunCliTest, KDisjointMessages) {
  const std::string g = write("tr.mcg", kTwoRoutes);
  EXPECT_EQ(run({"kdisjoint", "--graph", g, "--source", "0", "--dest", "3", "-k", "3"}),
            kExitNoPaths);
  EXPECT_THAT(out_.str(),
              HasSubstr("There exist no k paths from s to t shortest w.r.t. each criterion c_i"));
  EXPECT_EQ(run({"kdisjoint", "--graph", g, "--source", "3", "--dest", "0", "-k", "1"}),
            kExitNoPaths);
  EXPECT_THAT(out_.str(),
              HasSubstr("No path from s to t shortest w.r.t. each criterion c_i exist"));
  EXPECT_EQ(run({"--verify", "kdisjoint", "--graph", g, "--source", "0", "--dest", "3", "-k",
                 "2"}),
            kExitOk);
  EXPECT_THAT(out_.str(), HasSubstr("nodes=0,1,3"));
  EXPECT_THAT(out_.str(), HasSubstr("nodes=0,2,3"));
}

TEST_F(RunCliTest, TwoDisjoint) {
  const std::string g = write("sq.mcg", "mcgraph undirected 4 1\n0 1 1\n1 2 1\n2 3 1\n3 0 1\n");
  for (const char* mode : {"node", "edge"}) {
    EXPECT_EQ(run({"2dsp", "--graph", g, "--source", "0", "--dest", "2", "--mode", mode,
                   "--objective", "each-shortest", "--verify"}),
              kExitOk)
        << err_.str();
    EXPECT_THAT(out_.str(), HasSubstr("nodes=0,1,2"));
    EXPECT_THAT(out_.str(), HasSubstr("nodes=0,3,2"));
  }
  EXPECT_EQ(run({"2dsp", "--graph", g, "--source", "0", "--dest", "2", "--exhaustive-bound",
                 "4"}),
            kExitInputError);
}

TEST_F(RunCliTest, OutputIsDeterministic) {
  const std::string g = write("t1.mcg", kWorkedLine);
  const std::vector<std::string> args = {"--format", "json", "ksp",    "--graph", g,
                                         "--source", "0",    "--dest", "4",       "-k",
                                         "3"};
  run(args);
  const std::string first = out_.str();
  run(args);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(RunCliTest, InputErrors) {
  EXPECT_EQ(run({}), kExitInputError);
  EXPECT_EQ(run({"frobnicate"}), kExitInputError);
  EXPECT_EQ(run({"sp", "--graph", (dir_ / "missing.mcg").string(), "--source", "0", "--dest",
                 "1"}),
            kExitInputError);
  const std::string bad = write("bad.mcg", "mcgraph directed 3 1\n0 1 1\n1 1 2\n");
  EXPECT_EQ(run({"sp", "--graph", bad, "--source", "0", "--dest", "1"}), kExitInputError);
  EXPECT_THAT(err_.str(), HasSubstr("line 3"));
  const std::string g = write("t1.mcg", kWorkedLine);
  EXPECT_EQ(run({"sp", "--graph", g, "--source", "0", "--dest", "9"}), kExitInputError);
  EXPECT_EQ(run({"kdisjoint", "--graph", g, "--source", "0", "--dest", "4", "-k", "1"}),
            kExitInputError);
  EXPECT_EQ(run({"ksp", "--graph", g, "--source", "0", "--dest", "4", "-k", "0"}),
            kExitInputError);
  const std::string q0 = write("q0.mcg", "mcgraph directed 2 0\n0 1\n");
  EXPECT_EQ(run({"sp", "--graph", q0, "--source", "0", "--dest", "1"}), kExitInputError);
}

}  // namespace
}  // namespace mcpaths
