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

#ifndef SPANWALK_TREE_CONNECTIVITY_HPP
#define SPANWALK_TREE_CONNECTIVITY_HPP

#include <algorithm>
#include <bit>
#include <optional>
#include <vector>

#include "spanwalk/multigraph.hpp"
#include "spanwalk/rational.hpp"

namespace spanwalk {

struct EdgeInstance {
  int u, v;   // u < v
  int copy;   // which parallel copy, 0-based
  friend bool operator==(const EdgeInstance&, const EdgeInstance&) = default;
};

/// m edge-disjoint spanning trees, multiplicity-aware: parallel copies of a
/// pair are distinct instances and may sit in different trees.
struct TreePack {
  int m = 0;
  std::vector<std::vector<EdgeInstance>> trees;
};

namespace detail {

// Matroid-union augmentation for the m-fold graphic matroid: maintain m
// edge-disjoint forests and grow them one edge instance at a time along
// BFS exchange chains.
class ForestPacker {
 public:
  ForestPacker(const MultiGraph& g, int m) : n_(g.order()), m_(m) {
    for (const MultiGraph::Pair& p : g.pairs())
      for (int c = 0; c < std::min(p.mult, m); ++c)
        inst_.push_back(EdgeInstance{p.u, p.v, c});
    owner_.assign(inst_.size(), -1);
  }

  bool pack() {
    if (n_ == 0) return false;
    int assigned = 0;
    for (size_t e = 0; e < inst_.size(); ++e)
      if (augment(static_cast<int>(e))) ++assigned;
    return assigned == m_ * (n_ - 1);
  }

  TreePack extract() const {
    TreePack out;
    out.m = m_;
    out.trees.assign(static_cast<size_t>(m_), {});
    for (size_t e = 0; e < inst_.size(); ++e)
      if (owner_[e] >= 0) out.trees[static_cast<size_t>(owner_[e])].push_back(inst_[e]);
    return out;
  }

 private:
  // Forest adjacency for matroid i, as instance ids.
  std::vector<std::vector<int>> forest_adj(int i) const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n_));
    for (size_t e = 0; e < inst_.size(); ++e)
      if (owner_[e] == i) {
        adj[static_cast<size_t>(inst_[e].u)].push_back(static_cast<int>(e));
        adj[static_cast<size_t>(inst_[e].v)].push_back(static_cast<int>(e));
      }
    return adj;
  }

  // Path of instance ids joining u and v inside forest i; empty if none.
  std::vector<int> forest_path(int i, int u, int v) const {
    auto adj = forest_adj(i);
    std::vector<int> via(static_cast<size_t>(n_), -1);  // instance used to reach
    std::vector<int> prev(static_cast<size_t>(n_), -1);
    std::vector<int> queue{u};
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    seen[static_cast<size_t>(u)] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int a = queue[qi];
      if (a == v) break;
      for (int e : adj[static_cast<size_t>(a)]) {
        int b = inst_[static_cast<size_t>(e)].u == a ? inst_[static_cast<size_t>(e)].v
                                                     : inst_[static_cast<size_t>(e)].u;
        if (seen[static_cast<size_t>(b)]) continue;
        seen[static_cast<size_t>(b)] = 1;
        via[static_cast<size_t>(b)] = e;
        prev[static_cast<size_t>(b)] = a;
        queue.push_back(b);
      }
    }
    std::vector<int> path;
    if (!seen[static_cast<size_t>(v)]) return path;
    for (int x = v; x != u; x = prev[static_cast<size_t>(x)])
      path.push_back(via[static_cast<size_t>(x)]);
    return path;
  }

  bool independent_in(int i, int e) const {
    return forest_path(i, inst_[static_cast<size_t>(e)].u,
                       inst_[static_cast<size_t>(e)].v)
        .empty();
  }

  bool augment(int e0) {
    std::vector<int> parent(inst_.size(), -1);
    std::vector<char> labeled(inst_.size(), 0);
    labeled[static_cast<size_t>(e0)] = 1;
    std::vector<int> queue{e0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int f = queue[qi];
      for (int i = 0; i < m_; ++i) {
        if (owner_[static_cast<size_t>(f)] == i) continue;
        auto cyc = forest_path(i, inst_[static_cast<size_t>(f)].u,
                               inst_[static_cast<size_t>(f)].v);
        if (cyc.empty()) {
          // Exchange along the chain back to e0.
          int cur = f, into = i;
          while (cur != -1) {
            int vacated = owner_[static_cast<size_t>(cur)];
            owner_[static_cast<size_t>(cur)] = into;
            into = vacated;
            cur = parent[static_cast<size_t>(cur)];
          }
          return true;
        }
        for (int h : cyc)
          if (!labeled[static_cast<size_t>(h)]) {
            labeled[static_cast<size_t>(h)] = 1;
            parent[static_cast<size_t>(h)] = f;
            queue.push_back(h);
          }
      }
    }
    return false;
  }

  int n_, m_;
  std::vector<EdgeInstance> inst_;
  std::vector<int> owner_;
};

}  // namespace detail

/// m edge-disjoint spanning trees via matroid-union augmentation, or absent
/// when none exist.
inline std::optional<TreePack> find_disjoint_spanning_trees(const MultiGraph& g,
                                                            int m) {
  if (m < 1) throw Error("find_disjoint_spanning_trees: m must be >= 1");
  if (g.order() == 0) return std::nullopt;
  detail::ForestPacker packer(g, m);
  if (!packer.pack()) return std::nullopt;
  return packer.extract();
}

inline bool is_m_tree_connected(const MultiGraph& g, int m) {
  return find_disjoint_spanning_trees(g, m).has_value();
}

/// Classical partition criterion, swept exhaustively: every partition Q of
/// V(G) must have at least m(|Q|-1) crossing edges. Independent of the
/// augmentation route; desk-scale only.
inline bool nash_williams_check(const MultiGraph& g, int m) {
  if (m < 1) throw Error("nash_williams_check: m must be >= 1");
  int n = g.order();
  if (n > 12)
    throw Error("nash_williams_check: n > 12; use find_disjoint_spanning_trees");
  if (n == 0) return true;
  // Restricted-growth strings enumerate set partitions.
  std::vector<int> block(static_cast<size_t>(n), 0);
  while (true) {
    int nblocks = 1 + *std::max_element(block.begin(), block.end());
    if (nblocks > 1) {
      int crossing = 0;
      for (const MultiGraph::Pair& p : g.pairs())
        if (block[static_cast<size_t>(p.u)] != block[static_cast<size_t>(p.v)])
          crossing += p.mult;
      if (crossing < m * (nblocks - 1)) return false;
    }
    // Next restricted-growth string.
    int i = n - 1;
    while (i > 0) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, block[static_cast<size_t>(j)]);
      if (block[static_cast<size_t>(i)] <= mx) break;
      --i;
    }
    if (i == 0) return true;
    ++block[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) block[static_cast<size_t>(j)] = 0;
  }
}

/// The unique maximal partition of V into m-tree-connected parts, plus the
/// crossing-edge count and the half-integer invariant |P| - e_G(P)/2.
struct TCPartition {
  int m = 0;
  std::vector<VertexSet> parts;
  int crossing = 0;
  Rational omega;  // the paper-level invariant when m == 2
};

namespace detail {

// Shared engine: mark every vertex subset that induces an m-tree-connected
// subgraph, then peel maximal marked subsets. Intersecting m-tree-connected
// sets merge, so the maximal marked subset containing a vertex is unique.
class TcMarks {
 public:
  TcMarks(const MultiGraph& g, int m) : g_(g), n_(g.order()), m_(m) {
    if (n_ > 20) throw Error("tree_connected_components: n > 20 unsupported");
    vmask_.resize(static_cast<size_t>(n_), 0);
    for (const MultiGraph::Pair& p : g.pairs()) {
      vmask_[static_cast<size_t>(p.u)] |= 1u << p.v;
      vmask_[static_cast<size_t>(p.v)] |= 1u << p.u;
    }
    marks_.assign(size_t{1} << n_, 0);
    edges_.assign(size_t{1} << n_, 0);
    for (uint32_t mask = 1; mask < (1u << n_); ++mask) {
      int low = std::countr_zero(mask);
      uint32_t rest = mask & (mask - 1);
      int cnt = edges_[rest];
      for (const MultiGraph::Pair& p : g.pairs()) {
        if (p.u == low && (rest >> p.v & 1)) cnt += p.mult;
        if (p.v == low && (rest >> p.u & 1)) cnt += p.mult;
      }
      edges_[mask] = cnt;
      marks_[mask] = decide(mask);
    }
  }

  bool marked(uint32_t mask) const { return marks_[mask]; }

  // Partition of the induced subgraph on `world` into maximal marked parts.
  std::vector<uint32_t> parts_of(uint32_t world) const {
    std::vector<uint32_t> parts;
    uint32_t remaining = world;
    while (remaining) {
      uint32_t vbit = remaining & (0u - remaining);
      uint32_t best = vbit;
      for (uint32_t sub = remaining; sub; sub = (sub - 1) & remaining)
        if ((sub & vbit) && marks_[sub] && std::popcount(sub) > std::popcount(best))
          best = sub;
      parts.push_back(best);
      remaining &= ~best;
    }
    return parts;
  }

  int edges_in(uint32_t mask) const { return edges_[mask]; }

 private:
  bool decide(uint32_t mask) {
    int q = std::popcount(mask);
    if (q == 1) return true;  // singletons are m-tree-connected by convention
    if (edges_[mask] < m_ * (q - 1)) return false;
    // Connectivity inside the mask.
    uint32_t seen = mask & (0u - mask);
    while (true) {
      uint32_t grow = seen;
      for (int v = 0; v < n_; ++v)
        if (seen >> v & 1) grow |= vmask_[static_cast<size_t>(v)] & mask;
      if (grow == seen) break;
      seen = grow;
    }
    if (seen != mask) return false;
    VertexSet S;
    for (int v = 0; v < n_; ++v)
      if (mask >> v & 1) S.push_back(v);
    return is_m_tree_connected(g_.induced(S), m_);
  }

  const MultiGraph& g_;
  int n_, m_;
  std::vector<uint32_t> vmask_;
  std::vector<char> marks_;
  std::vector<int> edges_;
};

inline TCPartition partition_from_masks(const MultiGraph& g, int m,
                                        const std::vector<uint32_t>& part_masks,
                                        uint32_t world) {
  TCPartition out;
  out.m = m;
  int inside = 0;
  for (uint32_t pm : part_masks) {
    VertexSet part;
    for (int v = 0; v < g.order(); ++v)
      if (pm >> v & 1) part.push_back(v);
    inside += edges_within(g, part);
    out.parts.push_back(std::move(part));
  }
  VertexSet all;
  for (int v = 0; v < g.order(); ++v)
    if (world >> v & 1) all.push_back(v);
  out.crossing = edges_within(g, all) - inside;
  out.omega = Rational(static_cast<long long>(out.parts.size())) -
              Rational::halves(out.crossing);
  return out;
}

}  // namespace detail

inline TCPartition tree_connected_components(const MultiGraph& g, int m) {
  if (m < 1) throw Error("tree_connected_components: m must be >= 1");
  if (g.order() == 0) {
    TCPartition out;
    out.m = m;
    out.omega = Rational(0);
    return out;
  }
  detail::TcMarks marks(g, m);
  uint32_t world = (g.order() == 32 ? ~0u : (1u << g.order()) - 1);
  return detail::partition_from_masks(g, m, marks.parts_of(world), world);
}

/// Omega(G): |P| - e_G(P)/2 over the 2-tree-connected component partition.
/// Exact rational; the empty graph gives 0.
inline Rational omega_value(const MultiGraph& g) {
  return tree_connected_components(g, 2).omega;
}

}  // namespace spanwalk

#endif  // SPANWALK_TREE_CONNECTIVITY_HPP
