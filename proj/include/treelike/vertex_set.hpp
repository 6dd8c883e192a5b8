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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace treelike {

using Vertex = std::size_t;

/// Bit-packed subset of 0..n-1.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline VertexSet make_vertex_set(std::size_t n) { return VertexSet(n); }

inline VertexSet make_vertex_set(std::size_t n, const std::vector<Vertex>& members) {
  VertexSet s(n);
  for (Vertex v : members) s.set(v);
  return s;
}

inline VertexSet full_vertex_set(std::size_t n) {
  VertexSet s(n);
  s.set();
  return s;
}

/// Members in increasing order.
inline std::vector<Vertex> members(const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.push_back(v);
  return out;
}

/// Calls f(v) for every member in increasing order.
template <typename F>
void for_each_member(const VertexSet& s, F&& f) {
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) f(static_cast<Vertex>(v));
}

}  // namespace treelike
