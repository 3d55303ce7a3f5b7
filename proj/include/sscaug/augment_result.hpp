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

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sscaug/graph.hpp"
#include "sscaug/pmi.hpp"

namespace sscaug {

enum class BoundKind { kZeroForcing, kDistance };

constexpr std::string_view to_string(BoundKind kind) {
  return kind == BoundKind::kZeroForcing ? "zf" : "distance";
}

/// Outcome of a bound-preserving edge augmentation.
struct AugmentResult {
  DiGraph graph;            ///< original edges plus `added`
  std::vector<Edge> added;  ///< in the order they were accepted
  BoundKind kind = BoundKind::kZeroForcing;
  std::size_t bound_value = 0;
  std::size_t edges_before = 0;
  std::optional<PmiSequence> sequence;  ///< preserved sequence (distance bound only)

  std::size_t edges_after() const { return graph.num_edges(); }
};

}  // namespace sscaug
