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

// Chordality: longest induced cycle, k-chordality, chordal recognition and the
// asteroidal-triple test.

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "treelike/budget.hpp"
#include "treelike/constructions.hpp"
#include "treelike/distance.hpp"
#include "treelike/errors.hpp"
#include "treelike/graph.hpp"

namespace treelike {

/// Chordality lc(G) with a longest chordless cycle. Forests have lc = 2 and no
/// witness.
struct ChordalityResult {
  int lc = 2;
  std::optional<std::vector<Vertex>> witness_cycle;
};

struct CycleSearchOptions {
  /// Vertex cap for graphs with average degree above 4.
  std::size_t max_vertices_dense = 24;
  /// Vertex cap for sparser graphs.
  std::size_t max_vertices_sparse = 256;
  Budget budget{};
  unsigned threads = 1;
};

/// Maximum-cardinality-search order (ties to the smallest id). Reversed, it is
/// a perfect elimination ordering exactly when the graph is chordal.
inline std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!numbered[v] && (pick == n || weight[v] > weight[pick])) pick = v;
    }
    numbered[pick] = true;
    order.push_back(pick);
    for_each_member(g.neighbors(pick), [&](Vertex w) {
      if (!numbered[w]) ++weight[w];
    });
  }
  return order;
}

/// No induced cycle of length >= 4. Works on disconnected graphs.
inline bool is_chordal(const Graph& g) {
  VertexSet earlier(g.order());
  for (Vertex v : maximum_cardinality_search(g)) {
    VertexSet back = g.neighbors(v) & earlier;
    for (auto w = back.find_first(); w != VertexSet::npos; w = back.find_next(w)) {
      VertexSet rest = back;
      rest.reset(w);
      if (!rest.is_subset_of(g.neighbors(w))) return false;
    }
    earlier.set(v);
  }
  return true;
}

namespace detail {

// Depth-first search over induced paths rooted at the smallest cycle vertex.
// A path r, p1, ..., pk is extended by a neighbour w of pk that is larger than
// r and not adjacent to p1..p(k-1); w closes a chordless cycle when it is
// adjacent to r. Each cycle is reported once (p1 < last vertex).
class InducedCycleSearch {
 public:
  // on_cycle(cycle) returns true to stop the whole search.
  using Visitor = std::function<bool(const std::vector<Vertex>&)>;

  InducedCycleSearch(const Graph& g, BudgetMeter& meter) : g_(g), meter_(meter) {}

  // Longest chordless cycle through root r, considering only cycles of length
  // > floor_len (and >= shared when provided). Returns (length, cycle) or
  // length 0.
  std::pair<int, std::vector<Vertex>> longest_from(Vertex r, int floor_len, const std::atomic<int>* shared) {
    best_len_ = floor_len;
    best_.clear();
    shared_ = shared;
    visitor_ = nullptr;
    run_root(r);
    if (best_.empty()) return {0, {}};
    return {best_len_, best_};
  }

  // Visits every chordless cycle with length >= min_len rooted at r. Returns
  // true if the visitor asked to stop.
  bool visit_from(Vertex r, int min_len, const Visitor& visitor) {
    best_len_ = min_len - 1;
    shared_ = nullptr;
    visitor_ = &visitor;
    stopped_ = false;
    run_root(r);
    return stopped_;
  }

 private:
  void run_root(Vertex r) {
    const std::size_t n = g_.order();
    VertexSet forbidden(n);
    for (Vertex v = 0; v <= r; ++v) forbidden.set(v);
    path_.assign(1, r);
    const VertexSet& nr = g_.neighbors(r);
    for (auto p1 = nr.find_next(r); p1 != VertexSet::npos; p1 = nr.find_next(p1)) {
      path_.push_back(p1);
      VertexSet f = forbidden;
      f.set(p1);
      extend(f);
      path_.pop_back();
      if (stopped_) return;
    }
  }

  bool pruned(int bound) const {
    if (visitor_) return bound < best_len_ + 1;
    if (bound <= best_len_) return true;
    return shared_ && bound < shared_->load(std::memory_order_relaxed);
  }

  // `forbidden` holds vertices <= root, the path, and closed neighbourhoods of
  // the interior vertices p1..p(k-1).
  void extend(const VertexSet& forbidden) {
    meter_.tick();
    const Vertex r = path_.front();
    const Vertex last = path_.back();
    const int k = static_cast<int>(path_.size()) - 1;
    VertexSet cand = g_.neighbors(last) - forbidden;
    if (cand.none()) return;
    VertexSet blocked = forbidden | g_.neighbors(last);
    blocked.set(last);
    VertexSet free = ~blocked;
    const int bound = k + 2 + static_cast<int>(free.count());
    if (pruned(bound)) return;

    const VertexSet& nr = g_.neighbors(r);
    const Vertex p1 = path_[1];
    for (auto w = cand.find_first(); w != VertexSet::npos; w = cand.find_next(w)) {
      if (nr.test(w)) {
        if (w <= p1) continue;
        const int len = k + 2;
        path_.push_back(w);
        if (visitor_) {
          if (len > best_len_ && (*visitor_)(path_)) stopped_ = true;
        } else if (len > best_len_) {
          best_len_ = len;
          best_ = path_;
        }
        path_.pop_back();
        if (stopped_) return;
        continue;
      }
      path_.push_back(w);
      VertexSet next = blocked;
      next.set(w);
      extend(next);
      path_.pop_back();
      if (stopped_) return;
    }
  }

  const Graph& g_;
  BudgetMeter& meter_;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
  int best_len_ = 0;
  const std::atomic<int>* shared_ = nullptr;
  const Visitor* visitor_ = nullptr;
  bool stopped_ = false;
};

inline void check_cycle_cap(const Graph& g, const CycleSearchOptions& options) {
  const bool dense = g.size() > 2 * g.order();
  const std::size_t cap = dense ? options.max_vertices_dense : options.max_vertices_sparse;
  if (g.order() > cap) {
    throw BudgetError("induced-cycle search: " + std::to_string(g.order()) + " vertices exceeds the " +
                      (dense ? "dense" : "sparse") + " cap of " + std::to_string(cap));
  }
}

}  // namespace detail

/// Exact lc(G) with the lexicographically least longest chordless cycle
/// (rotated to start at its smallest vertex). Throws BudgetError rather than
/// returning an unverified answer.
inline ChordalityResult longest_induced_cycle(const Graph& g, const CycleSearchOptions& options = {}) {
  detail::check_cycle_cap(g, options);
  const std::size_t n = g.order();
  ChordalityResult result;
  std::atomic<int> shared{2};
  std::vector<std::pair<int, std::vector<Vertex>>> per_root(n);
  auto work = [&](std::size_t offset, std::size_t stride) {
    BudgetMeter meter(options.budget, "induced-cycle search");
    detail::InducedCycleSearch search(g, meter);
    for (Vertex r = offset; r < n; r += stride) {
      per_root[r] = search.longest_from(r, 2, &shared);
      int cur = shared.load();
      while (per_root[r].first > cur && !shared.compare_exchange_weak(cur, per_root[r].first)) {
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&, w] { work(w, workers); });
  }
  for (auto& [len, cycle] : per_root) {
    if (len > result.lc) {
      result.lc = len;
      result.witness_cycle = cycle;
    }
  }
  return result;
}

/// Whether every chordless cycle has length <= k; on failure the first
/// violating cycle found is returned.
struct KChordalResult {
  bool holds = true;
  std::optional<std::vector<Vertex>> violating_cycle;
};

inline KChordalResult is_k_chordal(const Graph& g, int k, const CycleSearchOptions& options = {}) {
  if (k < 2) throw ArgumentError("k-chordality needs k >= 2");
  detail::check_cycle_cap(g, options);
  if (is_chordal(g)) return {};
  BudgetMeter meter(options.budget, "induced-cycle search");
  detail::InducedCycleSearch search(g, meter);
  KChordalResult result;
  for (Vertex r = 0; r < g.order() && result.holds; ++r) {
    search.visit_from(r, k + 1, [&](const std::vector<Vertex>& cycle) {
      result.holds = false;
      result.violating_cycle = cycle;
      return true;
    });
  }
  return result;
}

/// Calls visitor on every chordless cycle of length >= min_len (each once)
/// until it returns true. Returns whether the visitor stopped the search.
inline bool for_each_induced_cycle(const Graph& g, int min_len,
                                   const std::function<bool(const std::vector<Vertex>&)>& visitor,
                                   const CycleSearchOptions& options = {}) {
  detail::check_cycle_cap(g, options);
  BudgetMeter meter(options.budget, "induced-cycle enumeration");
  detail::InducedCycleSearch search(g, meter);
  for (Vertex r = 0; r < g.order(); ++r) {
    if (search.visit_from(r, std::max(min_len, 3), visitor)) return true;
  }
  return false;
}

/// A cycle is isometric when its cyclic distance equals the host distance for
/// every pair of its vertices.
inline bool is_isometric_cycle(const DistanceMatrix& dm, const std::vector<Vertex>& cycle) {
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const std::size_t along = j - i;
      if (dm(cycle[i], cycle[j]) != static_cast<int>(std::min(along, len - along))) return false;
    }
  }
  return true;
}

/// First isometric cycle of length >= min_len found, if any.
inline std::optional<std::vector<Vertex>> find_isometric_cycle(const Graph& g, const DistanceMatrix& dm,
                                                                int min_len, const CycleSearchOptions& options = {}) {
  std::optional<std::vector<Vertex>> found;
  for_each_induced_cycle(
      g, min_len,
      [&](const std::vector<Vertex>& cycle) {
        if (!is_isometric_cycle(dm, cycle)) return false;
        found = cycle;
        return true;
      },
      options);
  return found;
}

/// (lc(G), lc(complement of G)); G is weakly chordal when both are <= 4.
struct ComplementChordality {
  int lc_graph = 2;
  int lc_complement = 2;
  bool weakly_chordal() const { return lc_graph <= 4 && lc_complement <= 4; }
};

inline ComplementChordality chordality_of_complement_pair(const Graph& g, const CycleSearchOptions& options = {}) {
  return {longest_induced_cycle(g, options).lc, longest_induced_cycle(complement(g), options).lc};
}

/// Asteroidal-triple freeness with the lexicographically least AT as witness.
struct AtFreeResult {
  bool at_free = true;
  std::optional<std::array<Vertex, 3>> witness;
};

/// For each z the components of G - N[z] are labeled; (a, b, c) is an AT iff
/// each pair lies in one component after removing the closed neighbourhood of
/// the third vertex.
inline AtFreeResult is_at_free(const Graph& g, const DistanceMatrix&) {
  require_connected(g);
  const std::size_t n = g.order();
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> comp(n, std::vector<std::size_t>(n, kNone));
  for (Vertex z = 0; z < n; ++z) {
    VertexSet alive = ~g.closed_neighbors(z);
    std::size_t next = 0;
    for (auto s = alive.find_first(); s != VertexSet::npos; s = alive.find_next(s)) {
      if (comp[z][s] != kNone) continue;
      std::vector<Vertex> stack{s};
      comp[z][s] = next;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        VertexSet nb = g.neighbors(v) & alive;
        for_each_member(nb, [&](Vertex w) {
          if (comp[z][w] == kNone) {
            comp[z][w] = next;
            stack.push_back(w);
          }
        });
      }
      ++next;
    }
  }
  auto same = [&](Vertex z, Vertex p, Vertex q) { return comp[z][p] != kNone && comp[z][p] == comp[z][q]; };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (same(a, b, c) && same(b, a, c) && same(c, a, b)) return {false, std::array<Vertex, 3>{a, b, c}};
      }
    }
  return {};
}

}  // namespace treelike
