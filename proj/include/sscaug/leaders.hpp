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
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "sscaug/graph.hpp"
#include "sscaug/rng.hpp"

namespace sscaug {

/// Ordered, duplicate-free, non-empty list of leader (input) nodes.
///
/// Position j is the j-th input column and the j-th coordinate of every
/// distance-to-leaders vector.
class LeaderSet {
 public:
  explicit LeaderSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
    if (ids_.empty()) throw std::invalid_argument("leader set must not be empty");
    std::vector<NodeId> sorted = ids_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("leader set contains duplicates");
    }
  }
  LeaderSet(std::initializer_list<NodeId> ids) : LeaderSet(std::vector<NodeId>(ids)) {}

  std::size_t size() const { return ids_.size(); }
  NodeId operator[](std::size_t j) const { return ids_[j]; }
  const std::vector<NodeId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool contains(NodeId v) const { return std::find(ids_.begin(), ids_.end(), v) != ids_.end(); }

  /// Throws std::invalid_argument if some leader is not a node of g.
  void check_against(const DiGraph& g) const {
    for (NodeId id : ids_) {
      if (!g.contains(id)) {
        throw std::invalid_argument("leader " + std::to_string(id) + " out of range for n=" +
                                    std::to_string(g.num_nodes()));
      }
    }
  }

  friend bool operator==(const LeaderSet&, const LeaderSet&) = default;

 private:
  std::vector<NodeId> ids_;
};

/// `count` distinct leaders drawn uniformly without replacement from 0..n-1,
/// in draw order.
inline LeaderSet random_leaders(std::size_t n, std::size_t count, Rng& rng) {
  if (count == 0 || count > n) throw std::invalid_argument("random_leaders: need 1 <= count <= n");
  std::vector<NodeId> pool(n);
  for (NodeId i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return LeaderSet(std::move(pool));
}

}  // namespace sscaug
