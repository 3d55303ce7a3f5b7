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

// Random-digraph experiment: bounds and augmentation sizes as a function of
// the number of leaders, averaged over seeded trials.

#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sscaug/augment_distance.hpp"
#include "sscaug/graph.hpp"
#include "sscaug/leaders.hpp"
#include "sscaug/pmi.hpp"
#include "sscaug/zero_forcing.hpp"

namespace sscaug {

enum class PmiMode { kExact, kGreedy };

constexpr std::string_view to_string(PmiMode mode) { return mode == PmiMode::kExact ? "exact" : "greedy"; }

struct BenchConfig {
  std::size_t n = 100;
  double p = 0.075;
  std::size_t trials = 30;
  std::vector<std::size_t> leader_counts = default_leader_counts();
  std::uint64_t seed = 1;
  PmiMode pmi_mode = PmiMode::kGreedy;
  std::size_t repeats = 1;  ///< best-of count for the distance augmentation
  std::size_t exact_limit = kDefaultExactPmiLimit;

  static std::vector<std::size_t> default_leader_counts() {
    std::vector<std::size_t> counts;
    for (std::size_t m = 1; m <= 20; ++m) counts.push_back(m);
    return counts;
  }

  void validate() const {
    if (trials == 0) throw std::invalid_argument("bench: trials must be >= 1");
    if (repeats == 0) throw std::invalid_argument("bench: repeats must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bench: p must lie in [0, 1]");
    if (leader_counts.empty()) throw std::invalid_argument("bench: leader_counts must not be empty");
    for (std::size_t m : leader_counts) {
      if (m == 0 || m > n) throw std::invalid_argument("bench: leader count " + std::to_string(m) + " not in [1, n]");
    }
  }
};

/// Trial means for one leader count. Edge columns are totals after
/// augmentation.
struct BenchRow {
  std::size_t leader_count = 0;
  double mean_zf_bound = 0;
  double mean_pmi_bound = 0;
  double mean_edges_original = 0;
  double mean_edges_zf_aug = 0;
  double mean_edges_dist_aug = 0;
  double mean_edges_zf_vs_same_bound = 0;
  /// Trials whose PMI sequence was shorter than the zero-forcing bound, so
  /// the same-bound run preserved the whole (shorter) sequence instead.
  std::size_t same_bound_shortfall = 0;
};

struct BenchInstance {
  std::size_t zf_bound = 0;
  std::size_t pmi_bound = 0;
  std::size_t edges_original = 0;
  std::size_t edges_zf = 0;
  std::size_t edges_dist = 0;
  std::size_t edges_dist_same_bound = 0;
  bool shortfall = false;
};

inline PmiSequence bench_sequence(const DLMatrix& dl, PmiMode mode, std::size_t exact_limit) {
  return mode == PmiMode::kExact ? longest_pmi_exact(dl, exact_limit) : longest_pmi_greedy(dl);
}

/// One (graph, leader set) cell of the experiment.
///
/// The same-bound column runs the distance augmentation on the first
/// min(zf, pmi) entries of the PMI sequence, so both augmentations protect a
/// bound equal to the zero-forcing bound whenever the sequence is long enough.
inline BenchInstance run_bench_instance(const DiGraph& g, const LeaderSet& leaders, const BenchConfig& cfg,
                                        std::uint64_t seed) {
  BenchInstance r;
  r.edges_original = g.num_edges();
  const auto zf = augment_zf(g, leaders);
  r.zf_bound = zf.bound_value;
  r.edges_zf = zf.edges_after();

  const DLMatrix dl = dl_matrix(g, leaders);
  const PmiSequence seq = bench_sequence(dl, cfg.pmi_mode, cfg.exact_limit);
  r.pmi_bound = seq.length();
  r.edges_dist = augment_distance_best_of(g, leaders, seq, derive_seed(seed, 1), cfg.repeats).edges_after();

  const std::size_t target = std::min(r.zf_bound, seq.length());
  r.shortfall = seq.length() < r.zf_bound;
  const PmiSequence prefix = pmi_prefix(seq, target);
  r.edges_dist_same_bound = augment_distance_best_of(g, leaders, prefix, derive_seed(seed, 2), cfg.repeats).edges_after();
  return r;
}

/// Trial t uses the graph random_digraph(n, p, seed + t) for every leader
/// count; leaders are drawn without replacement from a stream derived from
/// (seed + t, leader count).
inline std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  cfg.validate();
  std::vector<BenchRow> rows;
  std::vector<DiGraph> graphs;
  graphs.reserve(cfg.trials);
  for (std::size_t t = 0; t < cfg.trials; ++t) graphs.push_back(random_digraph(cfg.n, cfg.p, cfg.seed + t));

  for (std::size_t m : cfg.leader_counts) {
    BenchRow row;
    row.leader_count = m;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const std::uint64_t cell_seed = derive_seed(cfg.seed + t, m);
      Rng rng(cell_seed);
      const LeaderSet leaders = random_leaders(cfg.n, m, rng);
      const auto r = run_bench_instance(graphs[t], leaders, cfg, cell_seed);
      row.mean_zf_bound += static_cast<double>(r.zf_bound);
      row.mean_pmi_bound += static_cast<double>(r.pmi_bound);
      row.mean_edges_original += static_cast<double>(r.edges_original);
      row.mean_edges_zf_aug += static_cast<double>(r.edges_zf);
      row.mean_edges_dist_aug += static_cast<double>(r.edges_dist);
      row.mean_edges_zf_vs_same_bound += static_cast<double>(r.edges_dist_same_bound);
      row.same_bound_shortfall += r.shortfall ? 1 : 0;
    }
    const auto k = static_cast<double>(cfg.trials);
    row.mean_zf_bound /= k;
    row.mean_pmi_bound /= k;
    row.mean_edges_original /= k;
    row.mean_edges_zf_aug /= k;
    row.mean_edges_dist_aug /= k;
    row.mean_edges_zf_vs_same_bound /= k;
    rows.push_back(row);
  }
  return rows;
}

inline constexpr std::string_view kBenchFormatVersion = "sscaug-bench v1";
inline constexpr std::string_view kBenchCsvHeader =
    "leaders,zf_bound,pmi_bound,edges_orig,edges_zf,edges_dist,edges_dist_same_bound";

/// CSV with `#` metadata lines before the header and after the rows.
inline void write_bench_csv(std::ostream& out, const BenchConfig& cfg, const std::vector<BenchRow>& rows) {
  char buf[256];
  out << "# " << kBenchFormatVersion << '\n';
  std::snprintf(buf, sizeof buf, "# n=%zu p=%.6g trials=%zu seed=%llu repeats=%zu pmi_mode=%s", cfg.n, cfg.p,
                cfg.trials, static_cast<unsigned long long>(cfg.seed), cfg.repeats,
                std::string(to_string(cfg.pmi_mode)).c_str());
  out << buf << '\n';
  out << "# leader_counts=";
  for (std::size_t i = 0; i < cfg.leader_counts.size(); ++i) out << (i ? "," : "") << cfg.leader_counts[i];
  out << '\n';
  out << "# edges_*: mean edge totals after augmentation; edges_dist_same_bound preserves a PMI prefix of length "
         "min(zf_bound, pmi_bound)\n";
  out << kBenchCsvHeader << '\n';
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%.4f,%.4f,%.4f,%.4f,%.4f,%.4f", r.leader_count, r.mean_zf_bound,
                  r.mean_pmi_bound, r.mean_edges_original, r.mean_edges_zf_aug, r.mean_edges_dist_aug,
                  r.mean_edges_zf_vs_same_bound);
    out << buf << '\n';
  }
  out << "# same_bound_shortfall=";
  for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << rows[i].same_bound_shortfall;
  out << '\n';
}

}  // namespace sscaug
