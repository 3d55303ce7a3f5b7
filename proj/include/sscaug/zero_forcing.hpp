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

// Zero forcing with the in-neighbor rule: a black node with exactly one
// white in-neighbor turns that in-neighbor black. The size of the derived
// set lower-bounds the dimension of the strong structurally controllable
// subspace, and the augmentation here adds the maximum number of edges that
// keeps that size.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "sscaug/augment_result.hpp"
#include "sscaug/graph.hpp"
#include "sscaug/leaders.hpp"

namespace sscaug {

struct Force {
  NodeId forcer = 0;
  NodeId forced = 0;

  friend bool operator==(const Force&, const Force&) = default;
};

struct ZfResult {
  std::vector<NodeId> derived_set;  ///< ascending
  std::vector<Force> forcing_order;

  std::size_t size() const { return derived_set.size(); }
};

namespace detail {

/// Runs the forcing process. At every step the smallest-id black node with
/// a unique white in-neighbor forces. `on_force(forcer, forced, black)` is
/// invoked after `forced` has been colored, with `black` listing all black
/// nodes in coloring order. Returns the black mask.
template <class OnForce>
std::vector<char> zero_forcing_run(const DiGraph& g, const LeaderSet& leaders, std::vector<Force>& order,
                                   OnForce&& on_force) {
  leaders.check_against(g);
  const std::size_t n = g.num_nodes();
  std::vector<char> black(n, 0);
  std::vector<NodeId> black_list;
  for (NodeId l : leaders) {
    black[l] = 1;
    black_list.push_back(l);
  }
  std::vector<std::size_t> white_in(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : g.in_neighbors(v)) white_in[v] += black[u] ? 0 : 1;
  }
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId v : black_list) {
    if (white_in[v] == 1) ready.push(v);
  }
  while (!ready.empty()) {
    const NodeId u = ready.top();
    ready.pop();
    if (white_in[u] != 1) continue;  // stale entry
    const auto in = g.in_neighbors(u);
    const NodeId w = *std::find_if(in.begin(), in.end(), [&](NodeId x) { return !black[x]; });
    black[w] = 1;
    black_list.push_back(w);
    for (NodeId y : g.out_neighbors(w)) {
      if (--white_in[y] == 1 && black[y]) ready.push(y);
    }
    if (white_in[w] == 1) ready.push(w);
    order.push_back({u, w});
    on_force(u, w, static_cast<const std::vector<NodeId>&>(black_list));
  }
  return black;
}

}  // namespace detail

/// Derived set of `leaders` under the zero forcing process, with the forces
/// in the order they fired.
inline ZfResult derived_set(const DiGraph& g, const LeaderSet& leaders) {
  ZfResult out;
  const auto black = detail::zero_forcing_run(g, leaders, out.forcing_order, [](NodeId, NodeId, const auto&) {});
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (black[v]) out.derived_set.push_back(v);
  }
  return out;
}

/// Zero-forcing lower bound: size of the derived set.
inline std::size_t zf_bound(const DiGraph& g, const LeaderSet& leaders) { return derived_set(g, leaders).size(); }

/// |D|(|D|+1)/2 - m(m+1)/2 + (m+n-|D|)n - n, the edge count of the optimal
/// derived-set-preserving augmentation as stated for the general case.
///
/// Requires 1 <= m <= delta <= n.
inline std::uint64_t closed_form_zf_edges(std::uint64_t n, std::uint64_t m, std::uint64_t delta) {
  if (!(m >= 1 && m <= delta && delta <= n)) {
    throw std::invalid_argument("closed_form_zf_edges: need 1 <= m <= delta <= n (got n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ", delta=" + std::to_string(delta) + ")");
  }
  const auto N = static_cast<std::int64_t>(n);
  const auto M = static_cast<std::int64_t>(m);
  const auto D = static_cast<std::int64_t>(delta);
  return static_cast<std::uint64_t>(D * (D + 1) / 2 - M * (M + 1) / 2 + (M + N - D) * N - N);
}

/// Edge count of a maximum derived-set-size-preserving augmentation.
///
/// Equals closed_form_zf_edges except when exactly one node stays white:
/// then no black node may have that node as an in-neighbor (it would be
/// forced), which removes one more edge into each of the m black nodes that
/// never force.
inline std::uint64_t optimal_zf_edges(std::uint64_t n, std::uint64_t m, std::uint64_t delta) {
  const std::uint64_t base = closed_form_zf_edges(n, m, delta);
  return delta + 1 == n ? base - m : base;
}

/// Adds the maximum number of edges that leave the derived set unchanged.
///
/// Replays the forcing process; whenever u forces, every currently black
/// node gets an edge into u. Nodes that never force then receive edges from
/// all other nodes, except that if a single white node remains it gets no
/// edge into any black node.
inline AugmentResult augment_zf(const DiGraph& g, const LeaderSet& leaders) {
  const std::size_t n = g.num_nodes();
  std::vector<Edge> added;
  std::vector<char> forcer(n, 0);
  auto add = [&](NodeId from, NodeId to) {
    if (from != to && !g.has_edge(from, to)) added.push_back({from, to});
  };
  std::vector<Force> order;
  const auto black = detail::zero_forcing_run(g, leaders, order, [&](NodeId u, NodeId, const auto& black_list) {
    forcer[u] = 1;
    for (NodeId w : black_list) add(w, u);
  });

  std::size_t derived = 0;
  std::optional<NodeId> lone_white;
  for (NodeId v = 0; v < n; ++v) {
    if (black[v]) ++derived;
  }
  if (derived + 1 == n) {
    lone_white = static_cast<NodeId>(std::find(black.begin(), black.end(), 0) - black.begin());
  }
  for (NodeId x = 0; x < n; ++x) {
    if (forcer[x]) continue;
    for (NodeId w = 0; w < n; ++w) {
      if (lone_white && w == *lone_white && black[x]) continue;
      add(w, x);
    }
  }

  AugmentResult out;
  out.graph = g.with_edges(added);
  out.added = std::move(added);
  out.kind = BoundKind::kZeroForcing;
  out.bound_value = derived;
  out.edges_before = g.num_edges();
  return out;
}

}  // namespace sscaug
