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

#include "sscaug/bench.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace sscaug {
namespace {

BenchConfig small_config() {
  BenchConfig cfg;
  cfg.n = 12;
  cfg.p = 0.15;
  cfg.trials = 3;
  cfg.leader_counts = {1, 2, 4};
  cfg.seed = 5;
  return cfg;
}

std::string csv_of(const BenchConfig& cfg) {
  std::ostringstream out;
  write_bench_csv(out, cfg, run_bench(cfg));
  return out.str();
}

TEST(BenchConfigTest, DefaultsMatchExperiment) {
  const BenchConfig cfg;
  EXPECT_EQ(cfg.n, 100u);
  EXPECT_DOUBLE_EQ(cfg.p, 0.075);
  EXPECT_EQ(cfg.trials, 30u);
  EXPECT_EQ(cfg.leader_counts.size(), 20u);
  EXPECT_EQ(cfg.leader_counts.front(), 1u);
  EXPECT_EQ(cfg.leader_counts.back(), 20u);
  EXPECT_NO_THROW(cfg.validate());
}

TEST(BenchConfigTest, Validation) {
  auto bad = small_config();
  bad.trials = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = small_config();
  bad.leader_counts = {};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = small_config();
  bad.leader_counts = {13};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = small_config();
  bad.leader_counts = {0};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = small_config();
  bad.p = 1.5;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = small_config();
  bad.repeats = 0;
  EXPECT_THROW(run_bench(bad), std::invalid_argument);
}

TEST(BenchTest, AllNodesLeadersGiveCompleteDigraphs) {
  BenchConfig cfg = small_config();
  cfg.trials = 1;
  cfg.leader_counts = {cfg.n};
  const auto rows = run_bench(cfg);
  ASSERT_EQ(rows.size(), 1u);
  const double full = static_cast<double>(cfg.n * (cfg.n - 1));
  EXPECT_DOUBLE_EQ(rows[0].mean_zf_bound, static_cast<double>(cfg.n));
  EXPECT_DOUBLE_EQ(rows[0].mean_pmi_bound, static_cast<double>(cfg.n));
  EXPECT_DOUBLE_EQ(rows[0].mean_edges_zf_aug, full);
  EXPECT_DOUBLE_EQ(rows[0].mean_edges_dist_aug, full);
  EXPECT_DOUBLE_EQ(rows[0].mean_edges_zf_vs_same_bound, full);
}

TEST(BenchTest, RowsRespectInvariants) {
  const auto cfg = small_config();
  const auto rows = run_bench(cfg);
  ASSERT_EQ(rows.size(), cfg.leader_counts.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    EXPECT_EQ(r.leader_count, cfg.leader_counts[i]);
    EXPECT_GE(r.mean_zf_bound, static_cast<double>(r.leader_count));
    EXPECT_GE(r.mean_edges_zf_aug, r.mean_edges_original);
    EXPECT_GE(r.mean_edges_dist_aug, r.mean_edges_original);
    EXPECT_GE(r.mean_edges_zf_vs_same_bound, r.mean_edges_original);
    EXPECT_LE(r.same_bound_shortfall, cfg.trials);
  }
}

TEST(BenchTest, InstanceMatchesComponents) {
  const DiGraph g = random_digraph(15, 0.12, 3);
  const LeaderSet leaders{1, 6};
  BenchConfig cfg = small_config();
  const auto r = run_bench_instance(g, leaders, cfg, 77);
  EXPECT_EQ(r.zf_bound, zf_bound(g, leaders));
  EXPECT_EQ(r.edges_zf, augment_zf(g, leaders).edges_after());
  const auto seq = longest_pmi_greedy(dl_matrix(g, leaders));
  EXPECT_EQ(r.pmi_bound, seq.length());
  EXPECT_EQ(r.edges_dist, augment_distance_best_of(g, leaders, seq, derive_seed(77, 1), 1).edges_after());
  EXPECT_EQ(r.shortfall, seq.length() < r.zf_bound);
  EXPECT_GE(r.edges_dist_same_bound, r.edges_original);
}

TEST(BenchTest, ExactModeUsesExactSearch) {
  BenchConfig cfg = small_config();
  cfg.n = 8;
  cfg.pmi_mode = PmiMode::kExact;
  cfg.leader_counts = {2};
  const auto rows = run_bench(cfg);
  double expected = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const DiGraph g = random_digraph(cfg.n, cfg.p, cfg.seed + t);
    const std::uint64_t cell = derive_seed(cfg.seed + t, 2);
    Rng rng(cell);
    expected += static_cast<double>(longest_pmi_exact(dl_matrix(g, random_leaders(cfg.n, 2, rng))).length());
  }
  EXPECT_DOUBLE_EQ(rows[0].mean_pmi_bound, expected / static_cast<double>(cfg.trials));
}

TEST(BenchCsvTest, ByteIdenticalOnRerun) { EXPECT_EQ(csv_of(small_config()), csv_of(small_config())); }

TEST(BenchCsvTest, SeedChangesOutput) {
  auto other = small_config();
  other.seed = 6;
  EXPECT_NE(csv_of(small_config()), csv_of(other));
}

TEST(BenchCsvTest, Layout) {
  const auto cfg = small_config();
  std::istringstream in(csv_of(cfg));
  std::string line;
  std::vector<std::string> data;
  bool header_seen = false;
  std::getline(in, line);
  EXPECT_EQ(line, "# sscaug-bench v1");
  while (std::getline(in, line)) {
    if (line.rfind('#', 0) == 0) continue;
    if (!header_seen) {
      EXPECT_EQ(line, "leaders,zf_bound,pmi_bound,edges_orig,edges_zf,edges_dist,edges_dist_same_bound");
      header_seen = true;
      continue;
    }
    data.push_back(line);
  }
  ASSERT_EQ(data.size(), cfg.leader_counts.size());
  for (const auto& row : data) EXPECT_EQ(std::count(row.begin(), row.end(), ','), 6);
  EXPECT_EQ(data[0].substr(0, 2), "1,");
}

}  // namespace
}  // namespace sscaug
