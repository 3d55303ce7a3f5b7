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

// Text formats.
//
// Edge list: the first content line holds the node count n, every further
// line one edge `u v` (0-based ids, whitespace separated). `#` starts a
// comment; blank lines are ignored.
//
// DL vectors: one vector per line, entries are non-negative integers or
// `inf`; row i belongs to node i.

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sscaug/errors.hpp"
#include "sscaug/graph.hpp"
#include "sscaug/leaders.hpp"
#include "sscaug/pmi.hpp"

namespace sscaug {

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view tok) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

}  // namespace detail

/// Throws ParseError (with line number) on malformed input.
inline DiGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = detail::split_tokens(line);
    if (tok.empty()) continue;
    if (!n) {
      const auto v = tok.size() == 1 ? detail::parse_uint(tok[0]) : std::nullopt;
      if (!v || *v > std::numeric_limits<NodeId>::max()) throw ParseError(lineno, "expected node count");
      n = static_cast<std::size_t>(*v);
      continue;
    }
    if (tok.size() != 2) throw ParseError(lineno, "expected `u v`");
    const auto u = detail::parse_uint(tok[0]);
    const auto v = detail::parse_uint(tok[1]);
    if (!u || !v) throw ParseError(lineno, "node ids must be non-negative integers");
    if (*u >= *n || *v >= *n) throw ParseError(lineno, "node id out of range for n=" + std::to_string(*n));
    if (*u == *v) throw ParseError(lineno, "self-loop");
    const Edge e{static_cast<NodeId>(*u), static_cast<NodeId>(*v)};
    if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
    edges.push_back(e);
  }
  if (!n) throw ParseError(lineno + 1, "missing node count");
  return DiGraph(*n, std::move(edges));
}

inline void write_edge_list(std::ostream& out, const DiGraph& g) {
  out << g.num_nodes() << '\n';
  for (const Edge& e : g.edges()) out << e.from << ' ' << e.to << '\n';
}

/// Throws ParseError on malformed lines or rows of differing length.
inline DLMatrix read_dl_vectors(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<DLVector> rows;
  std::optional<std::size_t> width;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = detail::split_tokens(line);
    if (tok.empty()) continue;
    DLVector row;
    for (auto t : tok) {
      if (t == "inf") {
        row.push_back(Dist::inf());
      } else if (const auto v = detail::parse_uint(t); v && *v < std::numeric_limits<Dist::value_type>::max()) {
        row.push_back(Dist(static_cast<Dist::value_type>(*v)));
      } else {
        throw ParseError(lineno, "bad distance `" + std::string(t) + "`");
      }
    }
    if (width && *width != row.size()) throw ParseError(lineno, "vector length differs from earlier rows");
    width = row.size();
    rows.push_back(std::move(row));
  }
  if (!width) throw ParseError(lineno + 1, "no vectors");
  return DLMatrix(*width, std::move(rows));
}

/// Comma-separated leader ids, e.g. "0,4,7".
inline LeaderSet parse_leader_list(std::string_view text) {
  std::vector<NodeId> ids;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    const auto v = detail::parse_uint(tok);
    if (!v || *v > std::numeric_limits<NodeId>::max()) {
      throw std::invalid_argument("bad leader id `" + std::string(tok) + "`");
    }
    ids.push_back(static_cast<NodeId>(*v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return LeaderSet(std::move(ids));
}

/// Graphviz rendering; `added` edges are drawn red and bold, leaders as
/// double circles.
inline void write_dot(std::ostream& out, const DiGraph& g, std::span<const Edge> added = {},
                      const LeaderSet* leaders = nullptr) {
  std::vector<Edge> extra(added.begin(), added.end());
  std::sort(extra.begin(), extra.end());
  out << "digraph G {\n";
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    out << "  " << v;
    if (leaders && leaders->contains(v)) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.from << " -> " << e.to;
    if (std::binary_search(extra.begin(), extra.end(), e)) out << " [color=red, style=bold]";
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace sscaug
