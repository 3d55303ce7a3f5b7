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

// Distance-to-leader (DL) vectors and pseudo-monotonically increasing (PMI)
// sequences of them.
//
// A sequence D_1..D_k of DL vectors is PMI when every D_i has a witness
// coordinate c with D_i[c] < D_j[c] for all j > i. The length of the longest
// PMI sequence (over vectors with at least one finite entry) lower-bounds the
// dimension of the strong structurally controllable subspace.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sscaug/dist.hpp"
#include "sscaug/errors.hpp"
#include "sscaug/graph.hpp"
#include "sscaug/leaders.hpp"

namespace sscaug {

using DLVector = std::vector<Dist>;

/// Per-node distance-to-leaders vectors: row i, coordinate j is d(v_i, l_j).
class DLMatrix {
 public:
  DLMatrix() = default;
  DLMatrix(std::size_t num_leaders, std::vector<DLVector> rows)
      : m_(num_leaders), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
      if (r.size() != m_) throw std::invalid_argument("DLMatrix: row length differs from leader count");
    }
  }

  std::size_t num_nodes() const { return rows_.size(); }
  std::size_t num_leaders() const { return m_; }
  const DLVector& row(NodeId v) const { return rows_[v]; }
  const std::vector<DLVector>& rows() const { return rows_; }
  Dist at(NodeId v, std::size_t j) const { return rows_[v][j]; }

  /// Nodes whose vector has at least one finite entry, ascending.
  std::vector<NodeId> candidates() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < rows_.size(); ++v) {
      if (std::any_of(rows_[v].begin(), rows_[v].end(), [](Dist d) { return d.is_finite(); })) {
        out.push_back(v);
      }
    }
    return out;
  }

 private:
  std::size_t m_ = 0;
  std::vector<DLVector> rows_;
};

inline DLMatrix dl_matrix(const DiGraph& g, const LeaderSet& leaders) {
  leaders.check_against(g);
  std::vector<DLVector> rows(g.num_nodes(), DLVector(leaders.size()));
  for (std::size_t j = 0; j < leaders.size(); ++j) {
    const auto to_leader = bfs_distances_to(g, leaders[j]);
    for (NodeId v = 0; v < g.num_nodes(); ++v) rows[v][j] = to_leader[v];
  }
  return DLMatrix(leaders.size(), std::move(rows));
}

/// A PMI sequence with its certificate.
///
/// witnesses[i] is a valid witness coordinate of position i (the canonical
/// one from is_pmi, or the coordinate a search placed the vector on);
/// eps_star[i][j] is the largest integer strictly below which vectors[i][j]
/// may not drop without breaking the PMI property under those witnesses (-1
/// when unconstrained).
struct PmiSequence {
  std::vector<NodeId> nodes;
  std::vector<DLVector> vectors;
  std::vector<std::size_t> witnesses;
  std::vector<std::vector<std::int64_t>> eps_star;

  std::size_t length() const { return nodes.size(); }
};

namespace detail {

inline std::size_t common_width(std::span<const DLVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t m = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != m) throw std::invalid_argument("DL vectors have mixed lengths");
  }
  return m;
}

}  // namespace detail

/// Canonical witnesses if `vectors` (in order) form a PMI sequence.
///
/// Position i gets the smallest coordinate c with vectors[i][c] strictly
/// below vectors[j][c] for every later j (vacuous for the last position).
/// Sequences containing an all-unreachable vector are rejected.
inline std::optional<std::vector<std::size_t>> is_pmi(std::span<const DLVector> vectors) {
  const std::size_t m = detail::common_width(vectors);
  const std::size_t len = vectors.size();
  for (const auto& v : vectors) {
    if (std::none_of(v.begin(), v.end(), [](Dist d) { return d.is_finite(); })) return std::nullopt;
  }
  std::vector<std::size_t> witnesses(len, 0);
  // suffix_min[c] = min over positions after i of vectors[.][c].
  std::vector<Dist> suffix_min(m, Dist::inf());
  bool have_suffix = false;
  for (std::size_t i = len; i-- > 0;) {
    std::optional<std::size_t> w;
    if (!have_suffix) {
      w = 0;
    } else {
      for (std::size_t c = 0; c < m && !w; ++c) {
        if (vectors[i][c] < suffix_min[c]) w = c;
      }
    }
    if (!w) return std::nullopt;
    witnesses[i] = *w;
    for (std::size_t c = 0; c < m; ++c) suffix_min[c] = std::min(suffix_min[c], vectors[i][c]);
    have_suffix = true;
  }
  return witnesses;
}

/// Strict lower bounds eps*[i][j] = max({vectors[k][j] : k < i, witnesses[k] = j} u {-1}).
///
/// Throws std::invalid_argument unless `witnesses` certify `vectors` as PMI.
inline std::vector<std::vector<std::int64_t>> epsilon_star(std::span<const DLVector> vectors,
                                                           std::span<const std::size_t> witnesses) {
  const std::size_t m = detail::common_width(vectors);
  if (witnesses.size() != vectors.size()) {
    throw std::invalid_argument("epsilon_star: witness count differs from sequence length");
  }
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const std::size_t c = witnesses[i];
    if (c >= m) throw std::invalid_argument("epsilon_star: witness coordinate out of range");
    if (std::none_of(vectors[i].begin(), vectors[i].end(), [](Dist d) { return d.is_finite(); })) {
      throw std::invalid_argument("epsilon_star: all-unreachable vector at position " + std::to_string(i));
    }
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (!(vectors[i][c] < vectors[j][c])) {
        throw std::invalid_argument("epsilon_star: sequence is not PMI under the given witnesses (position " +
                                    std::to_string(i) + ")");
      }
    }
  }
  std::vector<std::vector<std::int64_t>> eps(vectors.size(), std::vector<std::int64_t>(m, -1));
  std::vector<std::int64_t> running(m, -1);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    eps[i] = running;
    const std::size_t c = witnesses[i];
    // A non-final witness value is always finite (it is below a later entry).
    if (vectors[i][c].is_finite()) {
      running[c] = std::max<std::int64_t>(running[c], vectors[i][c].value());
    }
  }
  return eps;
}

/// Builds the certified sequence for `nodes` taken in order from `dl`.
/// Throws std::invalid_argument when the order is not PMI.
inline PmiSequence make_pmi_sequence(const DLMatrix& dl, std::vector<NodeId> nodes) {
  PmiSequence seq;
  seq.vectors.reserve(nodes.size());
  for (NodeId v : nodes) {
    if (v >= dl.num_nodes()) throw std::invalid_argument("make_pmi_sequence: node out of range");
    seq.vectors.push_back(dl.row(v));
  }
  auto witnesses = is_pmi(seq.vectors);
  if (!witnesses) throw std::invalid_argument("make_pmi_sequence: node order is not a PMI sequence");
  seq.nodes = std::move(nodes);
  seq.witnesses = std::move(*witnesses);
  seq.eps_star = epsilon_star(seq.vectors, seq.witnesses);
  return seq;
}

/// As above with caller-chosen witnesses. Throws std::invalid_argument when
/// they do not certify the order.
inline PmiSequence make_pmi_sequence(const DLMatrix& dl, std::vector<NodeId> nodes,
                                     std::vector<std::size_t> witnesses) {
  PmiSequence seq;
  seq.vectors.reserve(nodes.size());
  for (NodeId v : nodes) {
    if (v >= dl.num_nodes()) throw std::invalid_argument("make_pmi_sequence: node out of range");
    seq.vectors.push_back(dl.row(v));
  }
  seq.eps_star = epsilon_star(seq.vectors, witnesses);
  seq.nodes = std::move(nodes);
  seq.witnesses = std::move(witnesses);
  return seq;
}

/// The first `len` positions of `seq`. Witnesses and eps* of a prefix are
/// the prefixes of the originals.
inline PmiSequence pmi_prefix(const PmiSequence& seq, std::size_t len) {
  if (len > seq.length()) throw std::invalid_argument("pmi_prefix: length exceeds sequence");
  PmiSequence out;
  const auto n = static_cast<std::ptrdiff_t>(len);
  out.nodes.assign(seq.nodes.begin(), seq.nodes.begin() + n);
  out.vectors.assign(seq.vectors.begin(), seq.vectors.begin() + n);
  out.witnesses.assign(seq.witnesses.begin(), seq.witnesses.begin() + n);
  out.eps_star.assign(seq.eps_star.begin(), seq.eps_star.begin() + n);
  return out;
}

inline constexpr std::size_t kDefaultExactPmiLimit = 15;

/// Longest PMI sequence by exhaustive search over candidate vectors.
///
/// Once (v, c) is placed, every later vector w must satisfy w[c] > v[c], and
/// those thresholds only grow. The set of still-eligible vectors therefore
/// captures the whole search state, so the search is a memoized recursion
/// over subsets. Ties between optimal sequences go to the lexicographically
/// first (node id, coordinate) choice at each step.
inline PmiSequence longest_pmi_exact(const DLMatrix& dl, std::size_t limit = kDefaultExactPmiLimit) {
  const std::vector<NodeId> cand = dl.candidates();
  const std::size_t k = cand.size();
  if (k > limit) {
    throw SizeError("longest_pmi_exact: " + std::to_string(k) + " candidate vectors exceed limit " +
                    std::to_string(limit) + "; use longest_pmi_greedy");
  }
  if (k > 30) throw SizeError("longest_pmi_exact: more than 30 candidates is not supported");
  const std::size_t m = dl.num_leaders();
  using Mask = std::uint32_t;

  // survivors[a][c]: candidates b with cand[b][c] > cand[a][c].
  std::vector<std::vector<Mask>> survivors(k, std::vector<Mask>(m, 0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t b = 0; b < k; ++b) {
        if (dl.at(cand[a], c) < dl.at(cand[b], c)) survivors[a][c] |= Mask{1} << b;
      }
    }
  }

  std::unordered_map<Mask, std::size_t> memo;
  auto best_len = [&](auto&& self, Mask mask) -> std::size_t {
    if (mask == 0) return 0;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::size_t best = 1;
    const auto remaining = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t a = 0; a < k && best < remaining; ++a) {
      if (!(mask >> a & 1U)) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (dl.at(cand[a], c).is_inf()) continue;
        const Mask next = mask & survivors[a][c];
        if (1 + static_cast<std::size_t>(std::popcount(next)) <= best) continue;
        best = std::max(best, 1 + self(self, next));
      }
    }
    memo.emplace(mask, best);
    return best;
  };

  const Mask all = (Mask{1} << k) - 1;
  std::vector<NodeId> order;
  std::vector<std::size_t> witnesses;
  Mask mask = all;
  std::size_t target = best_len(best_len, mask);
  while (target > 0) {
    bool advanced = false;
    for (std::size_t a = 0; a < k && !advanced; ++a) {
      if (!(mask >> a & 1U)) continue;
      for (std::size_t c = 0; c < m && !advanced; ++c) {
        if (dl.at(cand[a], c).is_inf()) continue;
        const Mask next = mask & survivors[a][c];
        if (1 + best_len(best_len, next) == target) {
          order.push_back(cand[a]);
          witnesses.push_back(c);
          mask = next;
          --target;
          advanced = true;
        }
      }
    }
    if (!advanced) throw std::logic_error("longest_pmi_exact: reconstruction failed");
  }
  return make_pmi_sequence(dl, std::move(order), std::move(witnesses));
}

/// Front-to-back greedy PMI construction.
///
/// At each step, among vectors eligible under the thresholds placed so far,
/// takes the (vector, coordinate) pair with the smallest finite value,
/// breaking ties by coordinate then node id.
inline PmiSequence longest_pmi_greedy(const DLMatrix& dl) {
  const std::size_t m = dl.num_leaders();
  std::vector<NodeId> pool = dl.candidates();
  std::vector<std::int64_t> threshold(m, -1);
  std::vector<NodeId> order;
  std::vector<std::size_t> witnesses;
  while (true) {
    std::vector<NodeId> eligible;
    for (NodeId v : pool) {
      bool ok = true;
      for (std::size_t c = 0; c < m && ok; ++c) ok = dl.at(v, c).exceeds(threshold[c]);
      if (ok) eligible.push_back(v);
    }
    if (eligible.empty()) break;
    std::optional<NodeId> pick;
    std::size_t pick_c = 0;
    Dist pick_val = Dist::inf();
    for (NodeId v : eligible) {
      for (std::size_t c = 0; c < m; ++c) {
        const Dist d = dl.at(v, c);
        if (d.is_inf()) continue;
        if (!pick || d < pick_val || (d == pick_val && (c < pick_c || (c == pick_c && v < *pick)))) {
          pick = v;
          pick_c = c;
          pick_val = d;
        }
      }
    }
    order.push_back(*pick);
    witnesses.push_back(pick_c);
    threshold[pick_c] = pick_val.value();
    pool = std::move(eligible);
    pool.erase(std::find(pool.begin(), pool.end(), *pick));
  }
  return make_pmi_sequence(dl, std::move(order), std::move(witnesses));
}

}  // namespace sscaug
