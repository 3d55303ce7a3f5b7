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

// Computes both bounds for a small random digraph and shows how many edges
// each augmentation can add without lowering its bound.

#include <cstdio>

#include "sscaug/sscaug.hpp"

int main() {
  using namespace sscaug;
  const DiGraph g = random_digraph(20, 0.1, 7);
  const LeaderSet leaders{0, 5, 11};

  const auto zf = augment_zf(g, leaders);
  const auto seq = longest_pmi_greedy(dl_matrix(g, leaders));
  const auto dist = augment_distance_best_of(g, leaders, seq, 42, 16);

  std::printf("n=%zu  edges=%zu  leaders=%zu\n", g.num_nodes(), g.num_edges(), leaders.size());
  std::printf("zero-forcing bound %zu: %zu edges after augmentation\n", zf.bound_value, zf.edges_after());
  std::printf("distance bound     %zu: %zu edges after augmentation\n", dist.bound_value, dist.edges_after());

  const auto report = sample_and_validate(zf.graph, leaders, zf.bound_value, 0, 5, 1);
  std::printf("sampled ranks on the zf-augmented graph:");
  for (std::size_t r : report.sampled_ranks) std::printf(" %zu", r);
  std::printf("\n");
  return 0;
}
