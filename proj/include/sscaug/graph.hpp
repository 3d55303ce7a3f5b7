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

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sscaug/dist.hpp"
#include "sscaug/rng.hpp"

namespace sscaug {

using NodeId = std::uint32_t;

/// Directed edge. `from` is the in-neighbor of `to`.
struct Edge {
  NodeId from = 0;
  NodeId to = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple directed graph on nodes 0..n-1.
///
/// No self-loops, no parallel edges. Edges are stored sorted
/// lexicographically; in- and out-neighbor lists are sorted ascending.
class DiGraph {
 public:
  DiGraph() = default;

  /// Throws std::invalid_argument on self-loops, duplicates or ids >= n.
  DiGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (const Edge& e : edges_) {
      if (e.from >= n_ || e.to >= n_) {
        throw std::invalid_argument("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                    ") out of range for n=" + std::to_string(n_));
      }
      if (e.from == e.to) {
        throw std::invalid_argument("self-loop on node " + std::to_string(e.from));
      }
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(dup->from) + "," +
                                  std::to_string(dup->to) + ")");
    }
    build_adjacency();
  }

  static DiGraph empty(std::size_t n) { return DiGraph(n, {}); }

  static DiGraph complete(std::size_t n) {
    std::vector<Edge> edges;
    edges.reserve(n * (n > 0 ? n - 1 : 0));
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = 0; v < n; ++v) {
        if (u != v) edges.push_back({u, v});
      }
    }
    return DiGraph(n, std::move(edges));
  }

  std::size_t num_nodes() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const NodeId> out_neighbors(NodeId u) const {
    return {out_adj_.data() + out_off_[u], out_adj_.data() + out_off_[u + 1]};
  }
  std::span<const NodeId> in_neighbors(NodeId v) const {
    return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
  }

  bool has_edge(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_) return false;
    const auto out = out_neighbors(u);
    return std::binary_search(out.begin(), out.end(), v);
  }

  bool contains(NodeId v) const { return v < n_; }

  /// Graph with `extra` edges added; edges already present and self-loops
  /// in `extra` are ignored.
  DiGraph with_edges(std::span<const Edge> extra) const {
    std::vector<Edge> all = edges_;
    all.reserve(edges_.size() + extra.size());
    for (const Edge& e : extra) {
      if (e.from != e.to) all.push_back(e);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return DiGraph(n_, std::move(all));
  }

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency() {
    out_off_.assign(n_ + 1, 0);
    in_off_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
      ++out_off_[e.from + 1];
      ++in_off_[e.to + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) {
      out_off_[i + 1] += out_off_[i];
      in_off_[i + 1] += in_off_[i];
    }
    out_adj_.resize(edges_.size());
    in_adj_.resize(edges_.size());
    std::vector<std::size_t> out_pos(out_off_.begin(), out_off_.end() - 1);
    std::vector<std::size_t> in_pos(in_off_.begin(), in_off_.end() - 1);
    // Lexicographic edge order makes both lists come out sorted.
    for (const Edge& e : edges_) {
      out_adj_[out_pos[e.from]++] = e.to;
      in_adj_[in_pos[e.to]++] = e.from;
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_off_{0};
  std::vector<std::size_t> in_off_{0};
  std::vector<NodeId> out_adj_;
  std::vector<NodeId> in_adj_;
};

namespace detail {

inline std::vector<Dist> bfs(const DiGraph& g, NodeId root, bool reversed) {
  if (!g.contains(root)) {
    throw std::invalid_argument("node " + std::to_string(root) + " out of range for n=" +
                                std::to_string(g.num_nodes()));
  }
  std::vector<Dist> dist(g.num_nodes(), Dist::inf());
  std::vector<NodeId> frontier{root};
  dist[root] = Dist(0);
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const NodeId x = frontier[head];
    const Dist nd = dist[x].next();
    for (NodeId y : reversed ? g.in_neighbors(x) : g.out_neighbors(x)) {
      if (dist[y].is_inf()) {
        dist[y] = nd;
        frontier.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace detail

/// d(u, target) for every u, by BFS from `target` over reversed edges.
inline std::vector<Dist> bfs_distances_to(const DiGraph& g, NodeId target) {
  return detail::bfs(g, target, /*reversed=*/true);
}

/// d(source, v) for every v.
inline std::vector<Dist> bfs_distances_from(const DiGraph& g, NodeId source) {
  return detail::bfs(g, source, /*reversed=*/false);
}

/// All ordered pairs (u, v), u != v, that are not edges of g, in
/// lexicographic order.
inline std::vector<Edge> complement_edges(const DiGraph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<Edge> missing;
  missing.reserve(n * (n > 0 ? n - 1 : 0) - g.num_edges());
  for (NodeId u = 0; u < n; ++u) {
    const auto out = g.out_neighbors(u);
    auto it = out.begin();
    for (NodeId v = 0; v < n; ++v) {
      if (v == u) continue;
      while (it != out.end() && *it < v) ++it;
      if (it != out.end() && *it == v) continue;
      missing.push_back({u, v});
    }
  }
  return missing;
}

/// Erdos-Renyi style digraph: each ordered pair u != v is included
/// independently with probability p. Pairs are visited lexicographically,
/// one uniform draw each, so (n, p, seed) fixes the graph.
inline DiGraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_digraph: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.uniform01() < p) edges.push_back({u, v});
    }
  }
  return DiGraph(n, std::move(edges));
}

}  // namespace sscaug
