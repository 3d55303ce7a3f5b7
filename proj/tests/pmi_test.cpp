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

#include "sscaug/pmi.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "sscaug/errors.hpp"
#include "sscaug/graph.hpp"
#include "sscaug/leaders.hpp"

namespace sscaug {
namespace {

constexpr Dist kInf = Dist::inf();

DLVector vec(std::initializer_list<int> xs) {
  DLVector v;
  for (int x : xs) v.push_back(x < 0 ? kInf : Dist(static_cast<Dist::value_type>(x)));
  return v;
}

std::vector<DLVector> worked_vectors() { return {vec({0, 3}), vec({1, 0}), vec({1, 4}), vec({2, 1}), vec({2, 2})}; }

// The order-dependent condition written out directly: position i needs a
// finite coordinate strictly below the same coordinate of every later vector.
bool literal_pmi(const std::vector<DLVector>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool found = false;
    for (std::size_t c = 0; c < s[i].size() && !found; ++c) {
      if (s[i][c].is_inf()) continue;
      bool all = true;
      for (std::size_t j = i + 1; j < s.size() && all; ++j) all = s[i][c] < s[j][c];
      found = all;
    }
    if (!found) return false;
  }
  return true;
}

bool holds_with_witnesses(const std::vector<DLVector>& s, const std::vector<std::size_t>& w) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i][w[i]].is_inf() && i + 1 < s.size()) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!(s[i][w[i]] < s[j][w[i]])) return false;
    }
  }
  return true;
}

// Longest PMI ordering by trying every ordered subset.
std::size_t brute_force_longest(const std::vector<DLVector>& rows) {
  const std::size_t k = rows.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1U) idx.push_back(i);
    }
    if (idx.size() <= best) continue;
    do {
      std::vector<DLVector> s;
      for (std::size_t i : idx) s.push_back(rows[i]);
      if (literal_pmi(s)) {
        best = idx.size();
        break;
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return best;
}

DLMatrix random_dl(std::size_t rows, std::size_t m, std::size_t max_value, Rng& rng, double inf_rate = 0.15) {
  std::vector<DLVector> out(rows, DLVector(m));
  for (auto& r : out) {
    for (auto& d : r) {
      d = rng.uniform01() < inf_rate ? kInf : Dist(static_cast<Dist::value_type>(rng.below(max_value + 1)));
    }
  }
  return DLMatrix(m, std::move(out));
}

std::vector<DLVector> candidate_rows(const DLMatrix& dl) {
  std::vector<DLVector> rows;
  for (NodeId v : dl.candidates()) rows.push_back(dl.row(v));
  return rows;
}

// Five nodes whose distance rows to leaders {0, 1} are exactly worked_vectors().
DiGraph pmi5_graph() { return DiGraph(5, {{1, 0}, {2, 0}, {3, 1}, {4, 3}, {4, 2}, {0, 4}}); }

TEST(DlMatrixTest, LeaderRowsHaveZeroAtOwnCoordinate) {
  const DiGraph g = random_digraph(12, 0.2, 3);
  const LeaderSet leaders{7, 2, 9};
  const DLMatrix dl = dl_matrix(g, leaders);
  ASSERT_EQ(dl.num_nodes(), 12u);
  ASSERT_EQ(dl.num_leaders(), 3u);
  for (std::size_t j = 0; j < leaders.size(); ++j) EXPECT_EQ(dl.at(leaders[j], j), Dist(0));
}

TEST(DlMatrixTest, MatchesBfsPerLeader) {
  const DiGraph g = random_digraph(15, 0.1, 8);
  const LeaderSet leaders{0, 4};
  const DLMatrix dl = dl_matrix(g, leaders);
  for (std::size_t j = 0; j < 2; ++j) {
    const auto d = bfs_distances_to(g, leaders[j]);
    for (NodeId v = 0; v < 15; ++v) EXPECT_EQ(dl.at(v, j), d[v]);
  }
}

TEST(DlMatrixTest, FixtureReproducesWorkedVectors) {
  const DLMatrix dl = dl_matrix(pmi5_graph(), LeaderSet{0, 1});
  EXPECT_EQ(dl.rows(), worked_vectors());
}

TEST(DlMatrixTest, IsolatedNodeHasNoFiniteEntryAndIsNotACandidate) {
  const DiGraph g(4, {{1, 0}, {2, 1}});
  const DLMatrix dl = dl_matrix(g, LeaderSet{0});
  EXPECT_EQ(dl.row(3), vec({-1}));
  EXPECT_EQ(dl.candidates(), (std::vector<NodeId>{0, 1, 2}));
}

TEST(IsPmiTest, WorkedSequence) {
  const auto s = worked_vectors();
  const auto w = is_pmi(s);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::vector<std::size_t>{0, 1, 0, 1, 0}));
}

TEST(IsPmiTest, RelaxedWorkedSequence) {
  const std::vector<DLVector> s{vec({0, 1}), vec({1, 0}), vec({1, 1}), vec({2, 1}), vec({2, 2})};
  EXPECT_TRUE(is_pmi(s).has_value());
}

TEST(IsPmiTest, SmallCases) {
  EXPECT_TRUE(is_pmi(std::vector<DLVector>{vec({5, 7})}).has_value());
  EXPECT_FALSE(is_pmi(std::vector<DLVector>{vec({1, 1}), vec({1, 1})}).has_value());
  EXPECT_TRUE(is_pmi(std::vector<DLVector>{}).has_value());
  EXPECT_FALSE(is_pmi(std::vector<DLVector>{vec({-1, -1})}).has_value());
}

TEST(IsPmiTest, UnreachableEntries) {
  // INF dominates finite values but never beats another INF.
  EXPECT_TRUE(is_pmi(std::vector<DLVector>{vec({1, -1}), vec({-1, 0})}).has_value());
  EXPECT_FALSE(is_pmi(std::vector<DLVector>{vec({-1, 2}), vec({-1, 1})}).has_value());
  const auto w = is_pmi(std::vector<DLVector>{vec({-1, 2}), vec({-1, 3})});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::vector<std::size_t>{1, 0}));
}

TEST(IsPmiTest, MixedLengthsThrow) {
  EXPECT_THROW(is_pmi(std::vector<DLVector>{vec({1, 2}), vec({1})}), std::invalid_argument);
}

TEST(IsPmiTest, AgreesWithLiteralDefinition) {
  Rng rng(21);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t len = 1 + rng.below(5);
    const DLMatrix dl = random_dl(len, 1 + rng.below(3), 4, rng, 0.1);
    const auto w = is_pmi(dl.rows());
    const bool any_all_inf = dl.candidates().size() != len;
    EXPECT_EQ(w.has_value(), !any_all_inf && literal_pmi(dl.rows()));
    if (w) {
      EXPECT_TRUE(holds_with_witnesses(dl.rows(), *w));
      // Canonical: no smaller coordinate works.
      for (std::size_t i = 0; i + 1 < len; ++i) {
        for (std::size_t c = 0; c < (*w)[i]; ++c) {
          auto alt = *w;
          alt[i] = c;
          EXPECT_FALSE(holds_with_witnesses(dl.rows(), alt));
        }
      }
    }
  }
}

TEST(EpsilonStarTest, WorkedListing) {
  const auto s = worked_vectors();
  const auto eps = epsilon_star(s, *is_pmi(s));
  const std::vector<std::vector<std::int64_t>> expected{{-1, -1}, {0, -1}, {0, 0}, {1, 0}, {1, 1}};
  EXPECT_EQ(eps, expected);
}

TEST(EpsilonStarTest, LoweringWithinWindowGivesRelaxedSequence) {
  auto s = worked_vectors();
  const auto w = *is_pmi(s);
  const auto eps = epsilon_star(s, w);
  EXPECT_EQ(eps[0][1], -1);
  EXPECT_EQ(eps[2][1], 0);
  s[0][1] = Dist(1);
  s[2][1] = Dist(1);
  ASSERT_TRUE(is_pmi(s).has_value());
  EXPECT_TRUE(holds_with_witnesses(s, w));
}

TEST(EpsilonStarTest, FirstVectorUnconstrained) {
  const std::vector<DLVector> s{vec({4, 2, 7}), vec({5, 1, -1})};
  EXPECT_EQ(epsilon_star(s, *is_pmi(s))[0], (std::vector<std::int64_t>{-1, -1, -1}));
}

TEST(EpsilonStarTest, RejectsWitnessesThatDoNotCertify) {
  const auto s = worked_vectors();
  EXPECT_THROW(epsilon_star(s, std::vector<std::size_t>{1, 1, 0, 1, 0}), std::invalid_argument);
  EXPECT_THROW(epsilon_star(s, std::vector<std::size_t>{0, 1}), std::invalid_argument);
}

TEST(EpsilonStarTest, StrictlyBelowEntries) {
  Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    const DLMatrix dl = random_dl(6, 3, 5, rng);
    const auto seq = longest_pmi_exact(dl);
    for (std::size_t i = 0; i < seq.length(); ++i) {
      for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(seq.vectors[i][j].exceeds(seq.eps_star[i][j]));
    }
  }
}

TEST(EpsilonStarTest, EntryRelaxationClosure) {
  Rng rng(77);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 4 + rng.below(5);
    const DiGraph g = random_digraph(n, 0.3, rng.next_u64());
    const std::size_t m = 1 + rng.below(3);
    const LeaderSet leaders = random_leaders(n, m, rng);
    const auto seq = longest_pmi_exact(dl_matrix(g, leaders));
    for (std::size_t i = 0; i < seq.length(); ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const Dist top = seq.vectors[i][j];
        const std::int64_t hi = top.is_inf() ? static_cast<std::int64_t>(n) : top.value();
        for (std::int64_t x = seq.eps_star[i][j] + 1; x <= hi; ++x) {
          auto relaxed = seq.vectors;
          relaxed[i][j] = Dist(static_cast<Dist::value_type>(x));
          ASSERT_TRUE(is_pmi(relaxed).has_value()) << "t=" << t << " i=" << i << " j=" << j << " x=" << x;
          EXPECT_TRUE(holds_with_witnesses(relaxed, seq.witnesses));
        }
      }
    }
  }
}

TEST(LongestPmiTest, WorkedVectorsGiveFive) {
  const DLMatrix dl(2, worked_vectors());
  EXPECT_EQ(longest_pmi_exact(dl).length(), 5u);
  EXPECT_EQ(longest_pmi_greedy(dl).length(), 5u);
  EXPECT_EQ(longest_pmi_exact(dl_matrix(pmi5_graph(), LeaderSet{0, 1})).length(), 5u);
}

TEST(LongestPmiTest, IdenticalVectorsGiveOne) {
  const DLMatrix dl(2, std::vector<DLVector>(7, vec({3, 1})));
  EXPECT_EQ(longest_pmi_exact(dl).length(), 1u);
  EXPECT_EQ(longest_pmi_greedy(dl).length(), 1u);
}

TEST(LongestPmiTest, AllUnreachableRowsAreSkipped) {
  const DLMatrix dl(2, {vec({-1, -1}), vec({0, 2}), vec({-1, -1}), vec({1, 0})});
  const auto seq = longest_pmi_exact(dl);
  EXPECT_EQ(seq.length(), 2u);
  for (NodeId v : seq.nodes) EXPECT_TRUE(v == 1 || v == 3);
  EXPECT_EQ(longest_pmi_exact(DLMatrix(1, {vec({-1})})).length(), 0u);
}

TEST(LongestPmiTest, ExactMatchesBruteForce) {
  Rng rng(4);
  for (int t = 0; t < 400; ++t) {
    const DLMatrix dl = random_dl(1 + rng.below(6), 1 + rng.below(3), 4, rng);
    const auto seq = longest_pmi_exact(dl);
    EXPECT_EQ(seq.length(), brute_force_longest(candidate_rows(dl))) << "trial " << t;
    EXPECT_TRUE(literal_pmi(seq.vectors));
    EXPECT_TRUE(holds_with_witnesses(seq.vectors, seq.witnesses));
  }
}

TEST(LongestPmiTest, GreedyNeverBeatsExactAndAlwaysVerifies) {
  Rng rng(9);
  for (int t = 0; t < 400; ++t) {
    const DLMatrix dl = random_dl(1 + rng.below(6), 1 + rng.below(3), 4, rng);
    const auto greedy = longest_pmi_greedy(dl);
    EXPECT_LE(greedy.length(), longest_pmi_exact(dl).length());
    EXPECT_TRUE(is_pmi(greedy.vectors).has_value());
    EXPECT_TRUE(holds_with_witnesses(greedy.vectors, greedy.witnesses));
  }
}

TEST(LongestPmiTest, SequenceFieldsAreConsistent) {
  const DiGraph g = random_digraph(12, 0.15, 31);
  const LeaderSet leaders{3, 8};
  const DLMatrix dl = dl_matrix(g, leaders);
  for (const auto& seq : {longest_pmi_exact(dl), longest_pmi_greedy(dl)}) {
    ASSERT_EQ(seq.vectors.size(), seq.length());
    for (std::size_t i = 0; i < seq.length(); ++i) EXPECT_EQ(seq.vectors[i], dl.row(seq.nodes[i]));
    EXPECT_EQ(seq.eps_star, epsilon_star(seq.vectors, seq.witnesses));
  }
}

TEST(LongestPmiTest, ExactIsDeterministic) {
  Rng rng(12);
  const DLMatrix dl = random_dl(12, 3, 6, rng);
  const auto a = longest_pmi_exact(dl);
  const auto b = longest_pmi_exact(dl);
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(LongestPmiTest, LimitIsEnforced) {
  Rng rng(1);
  const DLMatrix dl = random_dl(16, 2, 5, rng, 0.0);
  EXPECT_THROW(longest_pmi_exact(dl), SizeError);
  EXPECT_NO_THROW(longest_pmi_exact(dl, 16));
  EXPECT_THROW(longest_pmi_exact(dl, 3), SizeError);
}

TEST(LongestPmiTest, BoundedByZeroForcingStyleChain) {
  // Path into the single leader: distances 0..n-1 form a PMI sequence.
  std::vector<Edge> edges;
  for (NodeId v = 1; v < 8; ++v) edges.push_back({v, v - 1});
  const DLMatrix dl = dl_matrix(DiGraph(8, edges), LeaderSet{0});
  EXPECT_EQ(longest_pmi_exact(dl).length(), 8u);
  EXPECT_EQ(longest_pmi_greedy(dl).length(), 8u);
}

TEST(LongestPmiTest, GreedyWitnessesAreThePlacementCoordinates) {
  const auto seq = longest_pmi_greedy(DLMatrix(2, worked_vectors()));
  EXPECT_EQ(seq.nodes, (std::vector<NodeId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(seq.witnesses, (std::vector<std::size_t>{0, 1, 0, 1, 0}));
}

TEST(LongestPmiTest, AllLeadersGetZeroValuedWitnesses) {
  // Each leader row has 0 at its own coordinate; the searches certify every
  // position with that 0, so no distance can fall into a window's floor.
  const DiGraph g = random_digraph(9, 0.3, 5);
  std::vector<NodeId> all(9);
  std::iota(all.begin(), all.end(), NodeId{0});
  const DLMatrix dl = dl_matrix(g, LeaderSet(all));
  for (const auto& seq : {longest_pmi_greedy(dl)}) {
    ASSERT_EQ(seq.length(), 9u);
    for (const auto& row : seq.eps_star) {
      for (std::int64_t e : row) EXPECT_LE(e, 0);
    }
  }
}

TEST(PmiPrefixTest, PrefixKeepsCertificate) {
  const auto seq = longest_pmi_greedy(DLMatrix(2, worked_vectors()));
  const auto p = pmi_prefix(seq, 3);
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p.eps_star, epsilon_star(p.vectors, p.witnesses));
  EXPECT_THROW(pmi_prefix(seq, 6), std::invalid_argument);
  EXPECT_EQ(pmi_prefix(seq, 0).length(), 0u);
}

TEST(MakePmiSequenceTest, ExplicitWitnesses) {
  const DLMatrix dl(2, worked_vectors());
  EXPECT_THROW(make_pmi_sequence(dl, {0, 1}, {1, 0}), std::invalid_argument);
  EXPECT_EQ(make_pmi_sequence(dl, {0, 1}, {0, 1}).eps_star[1], (std::vector<std::int64_t>{0, -1}));
  EXPECT_THROW(make_pmi_sequence(DLMatrix(1, {vec({-1})}), {0}, {0}), std::invalid_argument);
}

TEST(MakePmiSequenceTest, RejectsNonPmiOrder) {
  const DLMatrix dl(2, worked_vectors());
  EXPECT_THROW(make_pmi_sequence(dl, {1, 0, 1}), std::invalid_argument);
  EXPECT_EQ(make_pmi_sequence(dl, {0, 1, 2, 3, 4}).witnesses, (std::vector<std::size_t>{0, 1, 0, 1, 0}));
}

}  // namespace
}  // namespace sscaug
