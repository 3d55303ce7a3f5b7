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

// Command-line front end: bounds, augmentation, distance-preserving pair
// augmentation, numerical validation and the random-digraph benchmark.
//
// Exit codes: 0 ok, 1 usage or bad argument, 2 input parse error,
// 3 verification failure.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sscaug/graph_io.hpp"
#include "sscaug/serialize.hpp"
#include "sscaug/sscaug.hpp"

namespace fs = std::filesystem;
using namespace sscaug;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kVerify = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A ParseError tagged with the file it came from.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DiGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file " + path);
  try {
    return read_edge_list(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

DLMatrix load_dl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open DL file " + path);
  try {
    return read_dl_vectors(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

PmiMode parse_pmi_mode(const std::string& s) { return s == "exact" ? PmiMode::kExact : PmiMode::kGreedy; }

/// "1-20", "1,2,5" or a mix such as "1-3,8".
std::vector<std::size_t> parse_count_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dash = part.find('-');
    try {
      std::size_t used = 0;
      if (dash == std::string::npos) {
        out.push_back(std::stoul(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } else {
        const std::string lo_s = part.substr(0, dash);
        const std::string hi_s = part.substr(dash + 1);
        const std::size_t lo = std::stoul(lo_s, &used);
        if (used != lo_s.size()) throw std::invalid_argument(part);
        const std::size_t hi = std::stoul(hi_s, &used);
        if (used != hi_s.size() || hi < lo) throw std::invalid_argument(part);
        for (std::size_t m = lo; m <= hi; ++m) out.push_back(m);
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad leader count list `" + text + "`");
    }
  }
  if (out.empty()) throw UsageError("empty leader count list");
  return out;
}

std::pair<NodeId, NodeId> parse_pair(const std::string& text) {
  const LeaderSet ids = parse_leader_list(text);
  if (ids.size() != 2) throw UsageError("pair `" + text + "` must be two node ids `a,b`");
  return {ids[0], ids[1]};
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << contents;
}

std::string edge_list_text(const DiGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

std::string edge_csv_text(const DiGraph& g, std::span<const Edge> added) {
  std::vector<Edge> extra(added.begin(), added.end());
  std::sort(extra.begin(), extra.end());
  std::ostringstream out;
  out << "from,to,added\n";
  for (const Edge& e : g.edges()) {
    out << e.from << ',' << e.to << ',' << (std::binary_search(extra.begin(), extra.end(), e) ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string dot_text(const DiGraph& g, std::span<const Edge> added, const LeaderSet* leaders) {
  std::ostringstream out;
  write_dot(out, g, added, leaders);
  return out.str();
}

/// Re-checks the preserved bound on a graph loaded back from disk.
void reverify(const DiGraph& original, const DiGraph& reloaded, const LeaderSet& leaders, const AugmentResult& r) {
  if (!(reloaded == r.graph)) throw VerificationError("written graph does not reload to the augmented graph");
  for (const Edge& e : original.edges()) {
    if (!reloaded.has_edge(e.from, e.to)) throw VerificationError("augmented graph lost an original edge");
  }
  if (r.kind == BoundKind::kZeroForcing) {
    if (derived_set(reloaded, leaders).derived_set != derived_set(original, leaders).derived_set) {
      throw VerificationError("derived set changed after augmentation");
    }
    return;
  }
  const PmiSequence& seq = *r.sequence;
  if (!windows_hold(reloaded, leaders, seq)) throw VerificationError("distance window violated after augmentation");
  const DLMatrix dl = dl_matrix(reloaded, leaders);
  std::vector<DLVector> updated;
  for (NodeId v : seq.nodes) updated.push_back(dl.row(v));
  if (!is_pmi(updated)) throw VerificationError("sequence is no longer PMI after augmentation");
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong structural controllability bounds and bound-preserving edge augmentation"};
  app.require_subcommand(1);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Zero-forcing and distance (PMI) lower bounds");
  std::string graph_path, leader_text, dl_path, pmi_mode = "exact";
  std::size_t exact_limit = kDefaultExactPmiLimit;
  bounds->add_option("--graph", graph_path, "Edge-list file");
  bounds->add_option("--leaders", leader_text, "Comma-separated leader ids");
  bounds->add_option("--dl-file", dl_path, "DL vectors, one per line (PMI bound only)");
  bounds->add_option("--pmi", pmi_mode, "Longest-PMI search")->check(CLI::IsMember({"exact", "greedy"}));
  bounds->add_option("--exact-limit", exact_limit, "Candidate limit for exact search");

  // augment
  auto* augment = app.add_subcommand("augment", "Add edges while preserving a bound");
  std::string bound_kind = "zf", out_dir, format = "json";
  std::size_t repeats = 1;
  std::uint64_t seed = 1;
  augment->add_option("--graph", graph_path, "Edge-list file")->required();
  augment->add_option("--leaders", leader_text, "Comma-separated leader ids")->required();
  augment->add_option("--bound", bound_kind, "Bound to preserve")->check(CLI::IsMember({"zf", "distance"}));
  augment->add_option("--pmi", pmi_mode, "Longest-PMI search")->check(CLI::IsMember({"exact", "greedy"}));
  augment->add_option("--exact-limit", exact_limit, "Candidate limit for exact search");
  augment->add_option("--repeats", repeats, "Randomized passes, best kept")->check(CLI::PositiveNumber);
  augment->add_option("--seed", seed, "Random seed");
  augment->add_option("--out", out_dir, "Directory for graph.txt, summary.json and the formatted graph");
  augment->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));

  // dpea
  auto* dpea_cmd = app.add_subcommand("dpea", "Maximum augmentation preserving d(a,b) for given pairs");
  std::vector<std::string> pair_texts;
  dpea_cmd->add_option("--graph", graph_path, "Edge-list file")->required();
  dpea_cmd->add_option("--pair", pair_texts, "Node pair a,b (repeatable)")->required();
  dpea_cmd->add_option("--out", out_dir, "Directory for graph.txt and summary.json");

  // validate
  auto* validate = app.add_subcommand("validate", "Sampled controllability ranks versus the bounds");
  std::size_t samples = 10, node_cap = kDefaultOracleNodeCap;
  double tol = kDefaultRankTolerance;
  validate->add_option("--graph", graph_path, "Edge-list file")->required();
  validate->add_option("--leaders", leader_text, "Comma-separated leader ids")->required();
  validate->add_option("--samples", samples, "Random weightings")->check(CLI::PositiveNumber);
  validate->add_option("--seed", seed, "Random seed");
  validate->add_option("--tol", tol, "Relative rank tolerance")->check(CLI::PositiveNumber);
  validate->add_option("--pmi", pmi_mode, "Longest-PMI search")->check(CLI::IsMember({"exact", "greedy"}));
  validate->add_option("--node-cap", node_cap, "Largest graph accepted");

  // bench
  auto* bench = app.add_subcommand("bench", "Random-digraph experiment, CSV output");
  BenchConfig cfg;
  std::string counts_text = "1-20", bench_pmi = "greedy", bench_out;
  bench->add_option("--n", cfg.n, "Nodes per graph")->check(CLI::PositiveNumber);
  bench->add_option("--p", cfg.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  bench->add_option("--trials", cfg.trials, "Graphs per leader count")->check(CLI::PositiveNumber);
  bench->add_option("--leaders", counts_text, "Leader counts, e.g. 1-20 or 1,5,10");
  bench->add_option("--seed", cfg.seed, "Base seed");
  bench->add_option("--pmi", bench_pmi, "Longest-PMI search")->check(CLI::IsMember({"exact", "greedy"}));
  bench->add_option("--repeats", cfg.repeats, "Randomized passes per distance augmentation")
      ->check(CLI::PositiveNumber);
  bench->add_option("--exact-limit", cfg.exact_limit, "Candidate limit for exact search");
  bench->add_option("--out", bench_out, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (bounds->parsed()) {
      json out = json::object();
      if (!dl_path.empty()) {
        if (!graph_path.empty()) throw UsageError("--dl-file and --graph are exclusive");
        const DLMatrix dl = load_dl(dl_path);
        const auto seq = bench_sequence(dl, parse_pmi_mode(pmi_mode), exact_limit);
        out["pmi_mode"] = pmi_mode;
        out["pmi_bound"] = seq.length();
        out["sequence"] = to_json(seq);
      } else {
        if (graph_path.empty() || leader_text.empty()) throw UsageError("bounds needs --graph and --leaders");
        const DiGraph g = load_graph(graph_path);
        const LeaderSet leaders = parse_leader_list(leader_text);
        leaders.check_against(g);
        const auto zf = derived_set(g, leaders);
        const auto seq = bench_sequence(dl_matrix(g, leaders), parse_pmi_mode(pmi_mode), exact_limit);
        out["n"] = g.num_nodes();
        out["edges"] = g.num_edges();
        out["leaders"] = leaders.ids();
        out["zf_bound"] = zf.size();
        out["zero_forcing"] = to_json(zf);
        out["pmi_mode"] = pmi_mode;
        out["pmi_bound"] = seq.length();
        out["sequence"] = to_json(seq);
      }
      print_json(out);
      return kOk;
    }

    if (augment->parsed()) {
      const DiGraph g = load_graph(graph_path);
      const LeaderSet leaders = parse_leader_list(leader_text);
      leaders.check_against(g);
      AugmentResult r;
      if (bound_kind == "zf") {
        r = augment_zf(g, leaders);
      } else {
        const auto seq = bench_sequence(dl_matrix(g, leaders), parse_pmi_mode(pmi_mode), exact_limit);
        r = augment_distance_best_of(g, leaders, seq, seed, repeats);
      }
      json summary = to_json(r, leaders);
      if (bound_kind == "distance") {
        summary["seed"] = seed;
        summary["repeats"] = repeats;
        summary["pmi_mode"] = pmi_mode;
      }
      std::string formatted;
      if (format == "csv") formatted = edge_csv_text(r.graph, r.added);
      if (format == "dot") formatted = dot_text(r.graph, r.added, &leaders);

      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        const fs::path dir(out_dir);
        write_file(dir / "graph.txt", edge_list_text(r.graph));
        write_file(dir / "summary.json", summary.dump(2) + "\n");
        if (format == "csv") write_file(dir / "graph.csv", formatted);
        if (format == "dot") write_file(dir / "graph.dot", formatted);
        reverify(g, load_graph((dir / "graph.txt").string()), leaders, r);
        print_json(summary);
      } else {
        std::istringstream back(edge_list_text(r.graph));
        reverify(g, read_edge_list(back), leaders, r);
        if (format == "json") {
          print_json(summary);
        } else {
          std::cout << formatted;
        }
      }
      return kOk;
    }

    if (dpea_cmd->parsed()) {
      const DiGraph g = load_graph(graph_path);
      std::vector<std::pair<NodeId, NodeId>> pairs;
      for (const auto& t : pair_texts) pairs.push_back(parse_pair(t));
      json out = json::object();
      DiGraph result;
      if (pairs.size() == 1) {
        const auto r = dpea(g, pairs[0].first, pairs[0].second);
        out = {{"pair", {pairs[0].first, pairs[0].second}}};
        out.update(to_json(r, g.num_edges()));
        result = r.graph;
      } else {
        result = DiGraph(g.num_nodes(), dpea_common_edges(g, pairs));
        std::vector<Edge> added;
        std::set_difference(result.edges().begin(), result.edges().end(), g.edges().begin(), g.edges().end(),
                            std::back_inserter(added));
        json pj = json::array();
        for (const auto& [a, b] : pairs) pj.push_back({a, b});
        out = {{"pairs", pj},
               {"edges_before", g.num_edges()},
               {"edges_after", result.num_edges()},
               {"added_edges", to_json(added)}};
      }
      for (const auto& [a, b] : pairs) {
        if (a != b && bfs_distances_from(result, a)[b] != bfs_distances_from(g, a)[b]) {
          throw VerificationError("distance between " + std::to_string(a) + " and " + std::to_string(b) + " changed");
        }
      }
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_file(fs::path(out_dir) / "graph.txt", edge_list_text(result));
        write_file(fs::path(out_dir) / "summary.json", out.dump(2) + "\n");
      }
      print_json(out);
      return kOk;
    }

    if (validate->parsed()) {
      const DiGraph g = load_graph(graph_path);
      const LeaderSet leaders = parse_leader_list(leader_text);
      leaders.check_against(g);
      const std::size_t zf = zf_bound(g, leaders);
      const std::size_t pmi = bench_sequence(dl_matrix(g, leaders), parse_pmi_mode(pmi_mode), exact_limit).length();
      const auto report = sample_and_validate(g, leaders, zf, pmi, samples, seed, tol, node_cap);
      json out = to_json(report);
      out["pmi_mode"] = pmi_mode;
      out["seed"] = seed;
      print_json(out);
      if (!report.ok()) {
        std::cerr << "error: sampled rank below a bound\n";
        return kVerify;
      }
      return kOk;
    }

    if (bench->parsed()) {
      cfg.leader_counts = parse_count_list(counts_text);
      cfg.pmi_mode = parse_pmi_mode(bench_pmi);
      const auto rows = run_bench(cfg);
      if (bench_out.empty()) {
        write_bench_csv(std::cout, cfg, rows);
      } else {
        std::ostringstream csv;
        write_bench_csv(csv, cfg, rows);
        write_file(bench_out, csv.str());
      }
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
