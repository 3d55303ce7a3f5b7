// Copyright 2026 The sscaug Authors
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

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "sscaug/graph_io.hpp"
#include "sscaug/serialize.hpp"

namespace sscaug {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const fs::path tmp = fs::temp_directory_path() / ("sscaug_cli_test_" + std::to_string(::getpid()) + ".out");
  const std::string cmd = std::string(SSCAUG_CLI_PATH) + " " + args + " > " + tmp.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  fs::remove(tmp);
  return r;
}

std::string data(const std::string& name) { return std::string(SSCAUG_DATA_DIR) + "/" + name; }

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sscaug_cli_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(CliTest, BoundsOnChain) {
  const auto r = run_cli("bounds --graph " + data("chain3.txt") + " --leaders 0");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["zf_bound"], 3);
  EXPECT_EQ(j["pmi_bound"], 3);
}

TEST(CliTest, BoundsFromDlFile) {
  const auto r = run_cli("bounds --dl-file " + data("pmi5_dl.txt"));
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["pmi_bound"], 5);
  EXPECT_EQ(j["sequence"]["eps_star"][4], json::array({1, 1}));
}

TEST(CliTest, AugmentZfWritesAndReloads) {
  const fs::path dir = fresh_dir("zf");
  const auto r = run_cli("augment --graph " + data("zf6.txt") + " --leaders 0,1 --bound zf --format dot --out " +
                         dir.string());
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["edges_after"], 25);
  EXPECT_EQ(j["bound_kind"], "zf");
  std::ifstream in(dir / "graph.txt");
  EXPECT_EQ(read_edge_list(in).num_edges(), 25u);
  EXPECT_NE(slurp(dir / "graph.dot").find("color=red"), std::string::npos);
  EXPECT_EQ(json::parse(slurp(dir / "summary.json")), j);
  fs::remove_all(dir);
}

TEST(CliTest, AugmentDistanceDeterministic) {
  const std::string args = "augment --graph " + data("pmi5.txt") + " --leaders 0,1 --bound distance --repeats 8 --seed 3";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = json::parse(a.out);
  EXPECT_EQ(j["bound_value"], 5);
  EXPECT_EQ(j["bound_kind"], "distance");
}

TEST(CliTest, AugmentCsvFormat) {
  const auto r = run_cli("augment --graph " + data("chain3.txt") + " --leaders 0 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("from,to,added\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST(CliTest, DpeaPath) {
  const auto r = run_cli("dpea --graph " + data("chain3.txt") + " --pair 2,0");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["edges_after"], 5);
}

TEST(CliTest, DpeaCommon) {
  const auto r = run_cli("dpea --graph " + data("pmi5.txt") + " --pair 2,4 --pair 3,0");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out).contains("pairs"));
}

TEST(CliTest, Validate) {
  const auto r = run_cli("validate --graph " + data("pmi5.txt") + " --leaders 0,1 --samples 4 --seed 2");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["sampled_ranks"].size(), 4u);
}

TEST(CliTest, BenchCsv) {
  const std::string args = "bench --n 10 --p 0.2 --trials 2 --leaders 1-3 --seed 4";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("leaders,zf_bound,pmi_bound,edges_orig,edges_zf,edges_dist,edges_dist_same_bound\n"),
            std::string::npos);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli("").code, 1);
  EXPECT_EQ(run_cli("frobnicate").code, 1);
  EXPECT_EQ(run_cli("augment --graph " + data("chain3.txt")).code, 1);
  EXPECT_EQ(run_cli("augment --graph " + data("chain3.txt") + " --leaders 0 --bound maybe").code, 1);
  EXPECT_EQ(run_cli("augment --graph " + data("chain3.txt") + " --leaders 7").code, 1);
  EXPECT_EQ(run_cli("augment --graph /nonexistent/file --leaders 0").code, 1);
  EXPECT_EQ(run_cli("bounds --graph " + data("bad_selfloop.txt") + " --leaders 0").code, 2);
  EXPECT_EQ(run_cli("dpea --graph " + data("chain3.txt") + " --pair 0,2").code, 1);
  EXPECT_EQ(run_cli("bench --n 5 --leaders 9").code, 1);
  EXPECT_EQ(run_cli("--help").code, 0);
}

}  // namespace
}  // namespace sscaug
