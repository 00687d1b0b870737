// Copyright 2026 The spanwalk Authors
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

// Independent oracles for cross-checking the library implementations. They
// deliberately re-derive everything from the definitions: closed traversals
// are enumerated step by step, connectivity by subset removal, and the
// decomposition by fixpoint merging with the partition criterion.

#ifndef SPANWALK_TESTS_ORACLES_HPP
#define SPANWALK_TESTS_ORACLES_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "spanwalk/multigraph.hpp"
#include "spanwalk/rational.hpp"
#include "spanwalk/tree_connectivity.hpp"
#include "spanwalk/walks.hpp"

namespace spanwalk::oracles {

// ---------------------------------------------------------------------------
// Direct traversal search: walk the graph edge by edge, visits capped per
// vertex, each edge instance used at most twice (walk) or once (trail).

class TraversalSearch {
 public:
  TraversalSearch(const MultiGraph& g, std::vector<int> caps, CertKind kind)
      : g_(g), caps_(std::move(caps)), kind_(kind), n_(g.order()) {
    for (const MultiGraph::Pair& p : g.pairs()) {
      pair_u_.push_back(p.u);
      pair_v_.push_back(p.v);
      limit_.push_back(kind == CertKind::walk ? 2 * p.mult : p.mult);
    }
    used_.assign(limit_.size(), 0);
    visits_.assign(static_cast<size_t>(n_), 0);
  }

  bool run() {
    if (n_ == 1) return true;
    if (!g_.connected()) return false;
    visits_[0] = 1;
    unvisited_ = n_ - 1;
    return step(0);
  }

 private:
  bool reachable_ok(int cur) const {
    // Every unvisited vertex, and the base point, must be reachable through
    // vertices that can still be entered, over edges with remaining uses.
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::vector<int> stack{cur};
    seen[static_cast<size_t>(cur)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (size_t e = 0; e < limit_.size(); ++e) {
        if (used_[e] >= limit_[e]) continue;
        int w = -1;
        if (pair_u_[e] == v) w = pair_v_[e];
        else if (pair_v_[e] == v) w = pair_u_[e];
        else continue;
        if (seen[static_cast<size_t>(w)]) continue;
        // w may serve as an endpoint of one more arrival even if at cap
        // only when it is the base point; otherwise it must have headroom.
        seen[static_cast<size_t>(w)] = 1;
        if (w == 0 || visits_[static_cast<size_t>(w)] <
                          caps_[static_cast<size_t>(w)])
          stack.push_back(w);
      }
    }
    if (!seen[0]) return false;
    for (int v = 0; v < n_; ++v)
      if (visits_[static_cast<size_t>(v)] == 0 && !seen[static_cast<size_t>(v)])
        return false;
    return true;
  }

  bool step(int cur) {
    if (!reachable_ok(cur)) return false;
    for (size_t e = 0; e < limit_.size(); ++e) {
      if (used_[e] >= limit_[e]) continue;
      int w;
      if (pair_u_[e] == cur) w = pair_v_[e];
      else if (pair_v_[e] == cur) w = pair_u_[e];
      else continue;
      if (w == 0 && unvisited_ == 0) return true;  // close the walk
      if (w != 0 && visits_[static_cast<size_t>(w)] >= caps_[static_cast<size_t>(w)])
        continue;
      if (w == 0 && visits_[0] >= caps_[0]) continue;  // mid-walk pass through
      ++used_[e];
      if (visits_[static_cast<size_t>(w)] == 0) --unvisited_;
      ++visits_[static_cast<size_t>(w)];
      if (step(w)) return true;
      --visits_[static_cast<size_t>(w)];
      if (visits_[static_cast<size_t>(w)] == 0) ++unvisited_;
      --used_[e];
    }
    return false;
  }

  const MultiGraph& g_;
  std::vector<int> caps_;
  CertKind kind_;
  int n_;
  int unvisited_ = 0;
  std::vector<int> pair_u_, pair_v_, limit_, used_, visits_;
};

inline bool traversal_walk_exists(const MultiGraph& g, int k, CertKind kind) {
  TraversalSearch search(g, std::vector<int>(static_cast<size_t>(g.order()), k), kind);
  return search.run();
}

inline int traversal_min_walk(const MultiGraph& g) {
  if (g.order() == 1) return 1;
  for (int k = 1; k <= g.order(); ++k)
    if (traversal_walk_exists(g, k, CertKind::walk)) return k;
  throw Error("traversal_min_walk: no walk found");
}

inline std::optional<int> traversal_min_trail(const MultiGraph& g) {
  if (g.order() == 1) return 1;
  int kmax = 1;
  for (int v = 0; v < g.order(); ++v) kmax = std::max(kmax, g.degree(v) / 2);
  for (int k = 1; k <= kmax; ++k)
    if (traversal_walk_exists(g, k, CertKind::trail)) return k;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hamilton cycle checker: bitmask DP. For one and two vertices the closed
// spanning walk conventions apply (an edge may be used twice).

inline bool hamilton_cycle_exists(const MultiGraph& g) {
  int n = g.order();
  if (n == 0) return false;
  if (n == 1) return true;
  if (n == 2) return g.has_edge(0, 1);
  std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
  for (const MultiGraph::Pair& p : g.pairs()) {
    adj[static_cast<size_t>(p.u)] |= 1u << p.v;
    adj[static_cast<size_t>(p.v)] |= 1u << p.u;
  }
  std::vector<std::vector<char>> reach(
      size_t{1} << n, std::vector<char>(static_cast<size_t>(n), 0));
  reach[1][0] = 1;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1)) continue;
    for (int v = 0; v < n; ++v) {
      if (!reach[mask][static_cast<size_t>(v)]) continue;
      uint32_t next = adj[static_cast<size_t>(v)] & ~mask;
      while (next) {
        int w = std::countr_zero(next);
        next &= next - 1;
        reach[mask | (1u << w)][static_cast<size_t>(w)] = 1;
      }
    }
  }
  uint32_t full = (n == 32 ? ~0u : (1u << n) - 1);
  for (int v = 1; v < n; ++v)
    if (reach[full][static_cast<size_t>(v)] && (adj[static_cast<size_t>(v)] & 1))
      return true;
  return false;
}

// ---------------------------------------------------------------------------
// Vertex connectivity by exhaustive cut enumeration.

inline int brute_vertex_connectivity(const MultiGraph& g) {
  int n = g.order();
  if (n <= 1) return 0;
  if (!g.connected()) return 0;
  for (int size = 1; size <= n - 2; ++size) {
    // Enumerate subsets of the given size.
    std::vector<int> idx(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      VertexSet removed(idx.begin(), idx.end());
      if (count_components(g, removed) != 1) return size;
      int i = size - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return n - 1;
}

// ---------------------------------------------------------------------------
// Tree-connected components by fixpoint merging: start from singletons and
// merge any set of parts whose union passes the partition criterion.

inline TCPartition brute_tc_partition(const MultiGraph& g, int m) {
  int n = g.order();
  std::vector<VertexSet> parts;
  for (int v = 0; v < n; ++v) parts.push_back({v});
  bool merged = true;
  while (merged) {
    merged = false;
    int np = static_cast<int>(parts.size());
    for (int size = 2; size <= np && !merged; ++size) {
      for (uint32_t mask = 0; mask < (1u << np) && !merged; ++mask) {
        if (std::popcount(mask) != size) continue;
        VertexSet u;
        for (int i = 0; i < np; ++i)
          if (mask >> i & 1)
            u.insert(u.end(), parts[static_cast<size_t>(i)].begin(),
                     parts[static_cast<size_t>(i)].end());
        std::sort(u.begin(), u.end());
        if (!nash_williams_check(g.induced(u), m)) continue;
        std::vector<VertexSet> next;
        for (int i = 0; i < np; ++i)
          if (!(mask >> i & 1)) next.push_back(parts[static_cast<size_t>(i)]);
        next.push_back(u);
        parts = std::move(next);
        merged = true;
      }
    }
  }
  std::sort(parts.begin(), parts.end());
  TCPartition out;
  out.m = m;
  out.parts = parts;
  int inside = 0;
  for (const VertexSet& part : parts) inside += edges_within(g, part);
  VertexSet all;
  for (int v = 0; v < n; ++v) all.push_back(v);
  out.crossing = edges_within(g, all) - inside;
  out.omega = Rational(static_cast<long long>(parts.size())) -
              Rational::halves(out.crossing);
  return out;
}

// ---------------------------------------------------------------------------
// Random graph helpers (deterministic seeds in the tests).

inline MultiGraph random_connected_graph(std::mt19937& rng, int n, double p) {
  while (true) {
    MultiGraph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < p) g.add_edge(i, j);
    if (g.order() > 0 && g.connected()) return g;
  }
}

inline MultiGraph random_multigraph(std::mt19937& rng, int n, double p,
                                    int max_mult) {
  MultiGraph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> mult(1, max_mult);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) g.add_edge(i, j, mult(rng));
  return g;
}

}  // namespace spanwalk::oracles

#endif  // SPANWALK_TESTS_ORACLES_HPP
