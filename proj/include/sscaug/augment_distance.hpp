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

// Edge augmentation that preserves hop distances: the single-pair problem
// (keep d(a, b)) solved exactly through a level structure, and a randomized
// augmentation that keeps a whole PMI sequence of distance-to-leader vectors
// valid.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sscaug/augment_result.hpp"
#include "sscaug/errors.hpp"
#include "sscaug/graph.hpp"
#include "sscaug/leaders.hpp"
#include "sscaug/pmi.hpp"
#include "sscaug/rng.hpp"

namespace sscaug {

/// Level of every node in a distance-preserving augmentation: level(v) is
/// d(a, v) in the augmented graph, with level(a) = 0 and level(b) = k.
struct LevelPartition {
  std::vector<std::size_t> level;
  std::size_t k = 0;
};

struct DpeaResult {
  DiGraph graph;
  LevelPartition levels;
  std::vector<Edge> added;  ///< lexicographic
};

/// Fixed point of "add (u, v) whenever d(a, u) >= d(a, v) - 1".
///
/// Such an edge never shortens a path out of `a`, so distances from `a` are
/// invariant and the loop collapses to a single pass over all pairs.
inline DiGraph dpea_closure(const DiGraph& g, NodeId a) {
  const auto lv = bfs_distances_from(g, a);
  std::vector<Edge> extra;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (u != v && lv[v] <= lv[u].next() && !g.has_edge(u, v)) extra.push_back({u, v});
    }
  }
  return g.with_edges(extra);
}

/// Maximum augmentation keeping d(a, b) = k.
///
/// Nodes with d(a, v) < k keep their level. Every other node except `b`
/// (unreachable from `a`, or at distance >= k) is placed at level k - 1,
/// which puts it on a shortest a-b path. The result holds exactly the pairs
/// (u, v) with level(u) >= level(v) - 1. For k = 1 nothing can shorten the
/// distance and the result is the complete digraph.
///
/// Throws std::invalid_argument if a == b, either node is out of range, or
/// b is unreachable from a.
inline DpeaResult dpea(const DiGraph& g, NodeId a, NodeId b) {
  if (!g.contains(a) || !g.contains(b)) throw std::invalid_argument("dpea: node out of range");
  if (a == b) throw std::invalid_argument("dpea: endpoints must differ");
  const auto from_a = bfs_distances_from(g, a);
  if (from_a[b].is_inf()) {
    throw std::invalid_argument("dpea: no path from " + std::to_string(a) + " to " + std::to_string(b) +
                                ", nothing to preserve");
  }
  const std::size_t n = g.num_nodes();
  const std::size_t k = from_a[b].value();

  DpeaResult out;
  out.levels.k = k;
  out.levels.level.resize(n);
  if (k == 1) {
    out.graph = DiGraph::complete(n);
    for (NodeId v = 0; v < n; ++v) out.levels.level[v] = v == a ? 0 : 1;
  } else {
    for (NodeId v = 0; v < n; ++v) {
      const Dist d = from_a[v];
      out.levels.level[v] = (v != b && (d.is_inf() || d.value() >= k)) ? k - 1 : d.value();
    }
    const auto& level = out.levels.level;
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = 0; v < n; ++v) {
        if (u != v && level[u] + 1 >= level[v]) edges.push_back({u, v});
      }
    }
    for (const Edge& e : g.edges()) {
      if (level[e.from] + 1 < level[e.to]) throw std::logic_error("dpea: original edge violates level rule");
    }
    out.graph = DiGraph(n, std::move(edges));
  }
  std::set_difference(out.graph.edges().begin(), out.graph.edges().end(), g.edges().begin(), g.edges().end(),
                      std::back_inserter(out.added));
  return out;
}

/// Edges common to the distance-preserving augmentations of every pair
/// (original edges included). Pairs with equal endpoints constrain nothing.
///
/// Throws std::invalid_argument if some pair has no path.
inline std::vector<Edge> dpea_common_edges(const DiGraph& g, std::span<const std::pair<NodeId, NodeId>> pairs) {
  std::vector<Edge> common = DiGraph::complete(g.num_nodes()).edges();
  for (const auto& [a, b] : pairs) {
    if (!g.contains(a) || !g.contains(b)) throw std::invalid_argument("dpea_common_edges: node out of range");
    if (a == b) continue;
    const auto sol = dpea(g, a, b);
    std::vector<Edge> next;
    std::set_intersection(common.begin(), common.end(), sol.graph.edges().begin(), sol.graph.edges().end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  return common;
}

namespace detail {

/// Incrementally maintained all-pairs hop distances plus the distance
/// windows (eps*, D] of a PMI sequence.
class WindowedAugmenter {
 public:
  using Raw = std::uint16_t;
  static constexpr Raw kInf = std::numeric_limits<Raw>::max();

  WindowedAugmenter(const DiGraph& g, const LeaderSet& leaders, const PmiSequence& seq)
      : n_(g.num_nodes()), dist_(n_ * n_, kInf) {
    if (n_ >= kInf) throw SizeError("distance augmentation supports fewer than 65535 nodes");
    for (NodeId x = 0; x < n_; ++x) {
      const auto row = bfs_distances_from(g, x);
      for (NodeId y = 0; y < n_; ++y) dist_[x * n_ + y] = row[y].is_inf() ? kInf : static_cast<Raw>(row[y].value());
    }
    for (std::size_t i = 0; i < seq.length(); ++i) {
      for (std::size_t j = 0; j < leaders.size(); ++j) {
        constraints_.push_back({seq.nodes[i], leaders[j], seq.eps_star[i][j]});
      }
    }
  }

  /// Whether adding (u, v) keeps every constrained distance above its eps*.
  /// Distances only shrink, so the upper end of each window holds already.
  bool admissible(NodeId u, NodeId v) const {
    for (const auto& c : constraints_) {
      const Raw su = at(c.node, u);
      const Raw vl = at(v, c.leader);
      if (su == kInf || vl == kInf) continue;
      const std::int64_t via = std::int64_t{su} + 1 + vl;
      if (via < at(c.node, c.leader) && via <= c.eps) return false;
    }
    return true;
  }

  void add(NodeId u, NodeId v) {
    const Raw* row_v = &dist_[v * n_];
    for (NodeId x = 0; x < n_; ++x) {
      const Raw xu = at(x, u);
      if (xu == kInf) continue;
      const std::uint32_t base = std::uint32_t{xu} + 1;
      Raw* row_x = &dist_[x * n_];
      for (std::size_t y = 0; y < n_; ++y) {
        // An unreachable entry of row_v makes the sum exceed kInf, so min keeps row_x.
        const std::uint32_t cand = base + row_v[y];
        row_x[y] = static_cast<Raw>(std::min<std::uint32_t>(row_x[y], cand));
      }
    }
  }

 private:
  struct Constraint {
    NodeId node;
    NodeId leader;
    std::int64_t eps;
  };

  Raw at(NodeId x, NodeId y) const { return dist_[x * n_ + y]; }

  std::size_t n_;
  std::vector<Raw> dist_;
  std::vector<Constraint> constraints_;
};

}  // namespace detail

/// Throws std::invalid_argument unless `seq` is a certified PMI sequence of
/// the distance-to-leader vectors of g.
inline void check_sequence(const DiGraph& g, const LeaderSet& leaders, const PmiSequence& seq) {
  leaders.check_against(g);
  const std::size_t len = seq.nodes.size();
  if (seq.vectors.size() != len || seq.witnesses.size() != len || seq.eps_star.size() != len) {
    throw std::invalid_argument("sequence fields have inconsistent lengths");
  }
  const DLMatrix dl = dl_matrix(g, leaders);
  for (std::size_t i = 0; i < len; ++i) {
    if (!g.contains(seq.nodes[i])) throw std::invalid_argument("sequence node out of range");
    if (seq.vectors[i] != dl.row(seq.nodes[i])) {
      throw std::invalid_argument("sequence vector " + std::to_string(i) + " does not match the graph distances");
    }
  }
  if (!is_pmi(seq.vectors)) throw std::invalid_argument("sequence is not PMI");
  if (epsilon_star(seq.vectors, seq.witnesses) != seq.eps_star) {
    throw std::invalid_argument("sequence eps* do not match its witnesses");
  }
}

/// Whether every sequence node's distance to every leader in `h` lies in its
/// window (eps*[i][j], vectors[i][j]].
inline bool windows_hold(const DiGraph& h, const LeaderSet& leaders, const PmiSequence& seq) {
  for (std::size_t j = 0; j < leaders.size(); ++j) {
    const auto to_leader = bfs_distances_to(h, leaders[j]);
    for (std::size_t i = 0; i < seq.length(); ++i) {
      const Dist d = to_leader[seq.nodes[i]];
      if (!d.exceeds(seq.eps_star[i][j]) || seq.vectors[i][j] < d) return false;
    }
  }
  return true;
}

namespace detail {

inline AugmentResult randomized_run(const DiGraph& g, const LeaderSet& leaders, const PmiSequence& seq,
                                    WindowedAugmenter engine, std::vector<Edge> missing, std::uint64_t seed) {
  Rng rng(seed);
  rng.shuffle(std::span<Edge>(missing));
  std::vector<Edge> added;
  for (const Edge& e : missing) {
    if (engine.admissible(e.from, e.to)) {
      engine.add(e.from, e.to);
      added.push_back(e);
    }
  }
  AugmentResult out;
  out.graph = g.with_edges(added);
  out.added = std::move(added);
  out.kind = BoundKind::kDistance;
  out.bound_value = seq.length();
  out.edges_before = g.num_edges();
  out.sequence = seq;
  if (!windows_hold(out.graph, leaders, seq)) {
    throw VerificationError("randomized augmentation left a distance outside its window");
  }
  return out;
}

}  // namespace detail

/// One pass of the randomized distance-bound-preserving augmentation.
///
/// Missing edges are visited in a seeded random order; an edge is kept iff,
/// with it added, every sequence node's distance to every leader stays
/// strictly above its eps*. The sequence's nodes then still form a PMI
/// sequence of the same length in the result.
inline AugmentResult augment_distance_randomized(const DiGraph& g, const LeaderSet& leaders, const PmiSequence& seq,
                                                 std::uint64_t seed) {
  check_sequence(g, leaders, seq);
  return detail::randomized_run(g, leaders, seq, detail::WindowedAugmenter(g, leaders, seq), complement_edges(g),
                                seed);
}

/// Seed of the `run`-th repetition in augment_distance_best_of. Run 0 uses
/// `seed` itself, so a single repetition equals augment_distance_randomized.
constexpr std::uint64_t repetition_seed(std::uint64_t seed, std::size_t run) {
  return run == 0 ? seed : derive_seed(seed, run);
}

/// Best (most edges) of `repeats` independent randomized passes; ties go
/// to the earliest pass.
inline AugmentResult augment_distance_best_of(const DiGraph& g, const LeaderSet& leaders, const PmiSequence& seq,
                                              std::uint64_t seed, std::size_t repeats) {
  if (repeats == 0) throw std::invalid_argument("augment_distance_best_of: repeat count must be >= 1");
  check_sequence(g, leaders, seq);
  const detail::WindowedAugmenter engine(g, leaders, seq);
  const auto missing = complement_edges(g);
  std::optional<AugmentResult> best;
  for (std::size_t run = 0; run < repeats; ++run) {
    auto res = detail::randomized_run(g, leaders, seq, engine, missing, repetition_seed(seed, run));
    if (!best || res.edges_after() > best->edges_after()) best = std::move(res);
  }
  return std::move(*best);
}

}  // namespace sscaug
