// Copyright 2026 The treelike Authors.
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

// Edge-list and graph6 readers and writers.
//
// Edge list: one edge per line as two whitespace-separated nonnegative
// integers, '#' starts a comment, blank lines are ignored, the vertex set is
// 0..max-id. graph6: the standard packed upper-triangle encoding, one graph
// per line, optional ">>graph6<<" header.

#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "treelike/errors.hpp"
#include "treelike/graph.hpp"

namespace treelike {

struct ParseResult {
  Graph graph;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

inline bool parse_uint(std::string_view token, std::size_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    f(line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

}  // namespace detail

/// Parses an edge list. Duplicate edges produce a warning and are merged;
/// self-loops, malformed lines and an empty edge set are errors.
inline ParseResult parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::string> warnings;
  std::size_t max_id = 0;
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    auto line = detail::strip_comment(raw);
    if (line.empty()) return;
    auto tokens = detail::split_ws(line);
    std::size_t u = 0, v = 0;
    if (tokens.size() != 2 || !detail::parse_uint(tokens[0], u) || !detail::parse_uint(tokens[1], v)) {
      throw ParseError(line_no, "expected two nonnegative integers, got '" + std::string(line) + "'");
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    Edge e = normalized({u, v});
    if (!seen.insert(e).second) {
      warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge {" + std::to_string(e.first) +
                         "," + std::to_string(e.second) + "} ignored");
      return;
    }
    edges.push_back(e);
    max_id = std::max(max_id, e.second);
  });
  if (edges.empty()) throw ParseError(0, "empty graph: no edges");
  return {Graph(max_id + 1, edges), std::move(warnings)};
}

/// Decodes a single graph6 line.
inline Graph parse_graph6(std::string_view line) {
  line = detail::trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  auto byte_at = [&](std::size_t i) -> std::uint32_t {
    if (i >= line.size()) throw ParseError(1, "graph6 string truncated");
    auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError(1, "graph6 byte out of range");
    return c - 63u;
  };
  std::size_t pos = 0;
  std::size_t n = 0;
  if (byte_at(0) < 63) {
    n = byte_at(0);
    pos = 1;
  } else if (byte_at(1) < 63) {
    n = (byte_at(1) << 12) | (byte_at(2) << 6) | byte_at(3);
    pos = 4;
  } else {
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte_at(i);
    pos = 8;
  }
  if (n == 0) throw ParseError(1, "empty graph: zero vertices");
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != pos + bytes) throw ParseError(1, "graph6 length does not match vertex count");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      std::uint32_t chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1u) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

/// Encodes a graph as one graph6 line (without newline).
inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  std::uint32_t chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

/// Canonical edge-list text: one "u v" line per edge in sorted order.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  if (!g.name().empty()) os << "# " << g.name() << "\n";
  os << "# vertices " << g.order() << " edges " << g.size() << "\n";
  for (const Edge& e : g.edges()) os << e.first << ' ' << e.second << '\n';
  return os.str();
}

/// Reads every graph of a graph6 stream, calling f(index, graph).
inline void for_each_graph6(std::istream& in, const std::function<void(std::size_t, const Graph&)>& f) {
  std::string line;
  std::size_t index = 0, line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = detail::trim(line);
    if (t.empty()) continue;
    try {
      f(index++, parse_graph6(t));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  }
}

enum class GraphFormat { kAuto, kEdgeList, kGraph6 };

/// Parses a single graph in the given format. Auto-detection treats the first
/// content line as an edge when it holds two integers, graph6 otherwise.
inline ParseResult parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto) {
  if (format == GraphFormat::kAuto) {
    format = GraphFormat::kGraph6;
    bool decided = false;
    detail::for_each_line(text, [&](std::size_t, std::string_view raw) {
      if (decided) return;
      auto line = detail::strip_comment(raw);
      if (line.empty()) return;
      decided = true;
      auto tokens = detail::split_ws(line);
      std::size_t a = 0;
      if (!tokens.empty() && detail::parse_uint(tokens[0], a)) format = GraphFormat::kEdgeList;
    });
  }
  if (format == GraphFormat::kEdgeList) return parse_edge_list(text);
  std::vector<Graph> graphs;
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    auto line = detail::trim(raw);
    if (line.empty()) return;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  });
  if (graphs.empty()) throw ParseError(0, "empty input");
  if (graphs.size() > 1) throw ParseError(0, "expected a single graph, found " + std::to_string(graphs.size()));
  return {std::move(graphs.front()), {}};
}

}  // namespace treelike
