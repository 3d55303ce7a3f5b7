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

// JSON views of results. Unreachable distances are written as "inf".

#pragma once

#include <json.hpp>

#include <vector>

#include "sscaug/augment_distance.hpp"
#include "sscaug/augment_result.hpp"
#include "sscaug/leaders.hpp"
#include "sscaug/pmi.hpp"
#include "sscaug/ssc_oracle.hpp"
#include "sscaug/zero_forcing.hpp"

namespace sscaug {

using json = nlohmann::ordered_json;

inline json to_json(Dist d) { return d.is_inf() ? json("inf") : json(d.value()); }

inline json to_json(const DLVector& v) {
  json out = json::array();
  for (Dist d : v) out.push_back(to_json(d));
  return out;
}

inline json to_json(std::span<const Edge> edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.from, e.to});
  return out;
}

inline json to_json(const PmiSequence& seq) {
  json vectors = json::array();
  for (const auto& v : seq.vectors) vectors.push_back(to_json(v));
  return {{"nodes", seq.nodes}, {"vectors", vectors}, {"witnesses", seq.witnesses}, {"eps_star", seq.eps_star}};
}

inline json to_json(const ZfResult& zf) {
  json forces = json::array();
  for (const Force& f : zf.forcing_order) forces.push_back({f.forcer, f.forced});
  return {{"derived_set", zf.derived_set}, {"forcing_order", forces}};
}

inline json to_json(const AugmentResult& r, const LeaderSet& leaders) {
  json out = {{"n", r.graph.num_nodes()},
              {"leaders", leaders.ids()},
              {"bound_kind", std::string(to_string(r.kind))},
              {"bound_value", r.bound_value},
              {"edges_before", r.edges_before},
              {"edges_after", r.edges_after()},
              {"added_edges", to_json(r.added)}};
  if (r.sequence) out["sequence"] = to_json(*r.sequence);
  return out;
}

inline json to_json(const DpeaResult& r, std::size_t edges_before) {
  return {{"k", r.levels.k},
          {"levels", r.levels.level},
          {"edges_before", edges_before},
          {"edges_after", r.graph.num_edges()},
          {"added_edges", to_json(r.added)}};
}

inline json to_json(const RankReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"sample", v.sample}, {"rank", v.rank}, {"bound", v.bound}});
  return {{"sampled_ranks", r.sampled_ranks},
          {"zf_bound", r.zf_bound},
          {"pmi_bound", r.pmi_bound},
          {"tolerance", r.tolerance},
          {"violations", violations},
          {"ok", r.ok()}};
}

}  // namespace sscaug
