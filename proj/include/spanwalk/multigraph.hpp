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

#ifndef SPANWALK_MULTIGRAPH_HPP
#define SPANWALK_MULTIGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace spanwalk {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Subset of the vertex range 0..n-1, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

inline VertexSet make_vertex_set(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

/// Loopless multigraph on vertices 0..n-1. Edges are unordered pairs with a
/// positive multiplicity; parallel copies of a pair are "instances" of it.
/// Every mutating call returns a new graph; values never change in place.
class MultiGraph {
 public:
  struct Pair {
    int u, v;   // u < v
    int mult;   // >= 1
    friend bool operator==(const Pair&, const Pair&) = default;
  };

  MultiGraph() = default;

  explicit MultiGraph(int n) : n_(n), labels_(static_cast<size_t>(n)) {
    if (n < 0) throw Error("vertex count must be non-negative");
    for (int v = 0; v < n; ++v) labels_[static_cast<size_t>(v)] = {v};
  }

  static MultiGraph from_edges(int n,
                               const std::vector<std::pair<int, int>>& edges) {
    MultiGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }

  /// Number of edges counted with multiplicity.
  int edge_count() const {
    int m = 0;
    for (const Pair& p : pairs_) m += p.mult;
    return m;
  }

  const std::vector<Pair>& pairs() const { return pairs_; }

  bool operator==(const MultiGraph& o) const {
    return n_ == o.n_ && pairs_ == o.pairs_;
  }

  void add_edge(int u, int v, int mult = 1) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error("loop edge rejected");
    if (mult < 1) throw Error("edge multiplicity must be positive");
    if (u > v) std::swap(u, v);
    auto it = find_pair(u, v);
    if (it != pairs_.end() && it->u == u && it->v == v) {
      it->mult += mult;
    } else {
      pairs_.insert(it, Pair{u, v, mult});
    }
  }

  int multiplicity(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return 0;
    if (u > v) std::swap(u, v);
    auto it = const_cast<MultiGraph*>(this)->find_pair(u, v);
    if (it != pairs_.end() && it->u == u && it->v == v) return it->mult;
    return 0;
  }

  bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }

  /// d_G(v): incident edges counted with multiplicity.
  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (const Pair& p : pairs_)
      if (p.u == v || p.v == v) d += p.mult;
    return d;
  }

  /// Distinct neighbours of v, sorted.
  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (const Pair& p : pairs_) {
      if (p.u == v) out.push_back(p.v);
      if (p.v == v) out.push_back(p.u);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::vector<int>& label(int v) const {
    check_vertex(v);
    return labels_[static_cast<size_t>(v)];
  }

  void set_label(int v, std::vector<int> tag) {
    check_vertex(v);
    labels_[static_cast<size_t>(v)] = std::move(tag);
  }

  /// Underlying simple graph (all multiplicities clamped to 1).
  MultiGraph simple() const {
    MultiGraph g = *this;
    for (Pair& p : g.pairs_) p.mult = 1;
    return g;
  }

  bool is_simple() const {
    return std::all_of(pairs_.begin(), pairs_.end(),
                       [](const Pair& p) { return p.mult == 1; });
  }

  /// Removes `count` copies of {u,v}; the pair disappears at multiplicity 0.
  MultiGraph remove_edge(int u, int v, int count = 1) const {
    if (u > v) std::swap(u, v);
    MultiGraph g = *this;
    auto it = g.find_pair(u, v);
    if (it == g.pairs_.end() || it->u != u || it->v != v)
      throw Error("remove_edge: no such edge {" + std::to_string(u) + "," +
                  std::to_string(v) + "}");
    if (it->mult < count) throw Error("remove_edge: multiplicity underflow");
    it->mult -= count;
    if (it->mult == 0) g.pairs_.erase(it);
    return g;
  }

  MultiGraph relabel(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
      throw Error("relabel: permutation size mismatch");
    MultiGraph g(n_);
    for (const Pair& p : pairs_)
      g.add_edge(perm[static_cast<size_t>(p.u)],
                 perm[static_cast<size_t>(p.v)], p.mult);
    for (int v = 0; v < n_; ++v)
      g.labels_[static_cast<size_t>(perm[static_cast<size_t>(v)])] =
          labels_[static_cast<size_t>(v)];
    return g;
  }

  /// Induced subgraph on S; vertices renumbered in sorted S order.
  MultiGraph induced(const VertexSet& S) const {
    std::vector<int> idx(static_cast<size_t>(n_), -1);
    int k = 0;
    for (int v : S) {
      check_vertex(v);
      idx[static_cast<size_t>(v)] = k++;
    }
    MultiGraph g(k);
    for (const Pair& p : pairs_) {
      int a = idx[static_cast<size_t>(p.u)], b = idx[static_cast<size_t>(p.v)];
      if (a >= 0 && b >= 0) g.add_edge(a, b, p.mult);
    }
    for (size_t i = 0; i < S.size(); ++i)
      g.labels_[i] = labels_[static_cast<size_t>(S[i])];
    return g;
  }

  bool connected() const {
    if (n_ == 0) return false;
    return count_components(*this, {}) == 1;
  }

  /// Deterministic fingerprint of (n, sorted edge multiset); labels excluded.
  std::string canonical_string() const {
    std::string s = std::to_string(n_) + "|";
    for (const Pair& p : pairs_)
      s += std::to_string(p.u) + "," + std::to_string(p.v) + "," +
           std::to_string(p.mult) + ";";
    return s;
  }

  uint64_t hash64() const {
    // FNV-1a over the canonical string.
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical_string()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }

  friend int count_components(const MultiGraph& g, const VertexSet& removed);

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw Error("vertex " + std::to_string(v) + " out of range [0," +
                  std::to_string(n_) + ")");
  }

  std::vector<Pair>::iterator find_pair(int u, int v) {
    return std::lower_bound(pairs_.begin(), pairs_.end(), std::pair{u, v},
                            [](const Pair& p, const std::pair<int, int>& q) {
                              return std::pair{p.u, p.v} < q;
                            });
  }

  int n_ = 0;
  std::vector<Pair> pairs_;
  std::vector<std::vector<int>> labels_;
};

/// omega(G \ removed); the empty graph has 0 components.
inline int count_components(const MultiGraph& g, const VertexSet& removed) {
  std::vector<char> gone(static_cast<size_t>(g.order()), 0);
  for (int v : removed) {
    if (v < 0 || v >= g.order()) throw Error("removed vertex out of range");
    gone[static_cast<size_t>(v)] = 1;
  }
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.order()));
  for (const MultiGraph::Pair& p : g.pairs()) {
    if (gone[static_cast<size_t>(p.u)] || gone[static_cast<size_t>(p.v)])
      continue;
    adj[static_cast<size_t>(p.u)].push_back(p.v);
    adj[static_cast<size_t>(p.v)].push_back(p.u);
  }
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  int comps = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (gone[static_cast<size_t>(s)] || seen[static_cast<size_t>(s)]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)])
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

/// e_G(S): edges with both ends in S, counted with multiplicity.
inline int edges_within(const MultiGraph& g, const VertexSet& S) {
  std::vector<char> in(static_cast<size_t>(g.order()), 0);
  for (int v : S) {
    if (v < 0 || v >= g.order()) throw Error("edges_within: vertex out of range");
    in[static_cast<size_t>(v)] = 1;
  }
  int m = 0;
  for (const MultiGraph::Pair& p : g.pairs())
    if (in[static_cast<size_t>(p.u)] && in[static_cast<size_t>(p.v)]) m += p.mult;
  return m;
}

/// Contraction result with enough provenance to pull certificates back:
/// vertex_map sends old vertices to new ones, and pair_origins[i] lists the
/// old pair indices (in old lex order) that merged into new pair i.
struct Contraction {
  MultiGraph graph;
  std::vector<int> vertex_map;
  std::vector<std::vector<int>> pair_origins;
};

namespace detail {

inline Contraction contract_by_map(const MultiGraph& g,
                                   const std::vector<int>& vmap, int new_n,
                                   bool simplify) {
  Contraction out;
  out.vertex_map = vmap;
  MultiGraph h(new_n);
  // Accumulate multiplicities per new pair, remembering contributing pairs.
  std::vector<std::pair<std::pair<int, int>, int>> mapped;
  for (size_t i = 0; i < g.pairs().size(); ++i) {
    const auto& p = g.pairs()[i];
    int a = vmap[static_cast<size_t>(p.u)], b = vmap[static_cast<size_t>(p.v)];
    if (a == b) continue;  // contracted copies become loops and are dropped
    if (a > b) std::swap(a, b);
    mapped.push_back({{a, b}, static_cast<int>(i)});
  }
  std::sort(mapped.begin(), mapped.end());
  for (size_t i = 0; i < mapped.size();) {
    size_t j = i;
    int total = 0;
    std::vector<int> origins;
    while (j < mapped.size() && mapped[j].first == mapped[i].first) {
      origins.push_back(mapped[j].second);
      total += g.pairs()[static_cast<size_t>(mapped[j].second)].mult;
      ++j;
    }
    h.add_edge(mapped[i].first.first, mapped[i].first.second,
               simplify ? 1 : total);
    out.pair_origins.push_back(std::move(origins));
    i = j;
  }
  // Merge original-vertex tags.
  std::vector<std::set<int>> tags(static_cast<size_t>(new_n));
  for (int v = 0; v < g.order(); ++v)
    for (int t : g.label(v))
      tags[static_cast<size_t>(vmap[static_cast<size_t>(v)])].insert(t);
  for (int v = 0; v < new_n; ++v)
    h.set_label(v, std::vector<int>(tags[static_cast<size_t>(v)].begin(),
                                    tags[static_cast<size_t>(v)].end()));
  out.graph = std::move(h);
  return out;
}

}  // namespace detail

/// G/e with provenance. The merged vertex takes min(u,v)'s slot; vertices
/// above max(u,v) shift down by one.
inline Contraction contract_edge_traced(const MultiGraph& g, int u, int v) {
  if (u > v) std::swap(u, v);
  if (!g.has_edge(u, v))
    throw Error("contract_edge: no edge {" + std::to_string(u) + "," +
                std::to_string(v) + "}");
  std::vector<int> vmap(static_cast<size_t>(g.order()));
  for (int w = 0; w < g.order(); ++w) {
    if (w == v)
      vmap[static_cast<size_t>(w)] = u;
    else if (w > v)
      vmap[static_cast<size_t>(w)] = w - 1;
    else
      vmap[static_cast<size_t>(w)] = w;
  }
  return detail::contract_by_map(g, vmap, g.order() - 1, /*simplify=*/false);
}

inline MultiGraph contract_edge(const MultiGraph& g, int u, int v) {
  return contract_edge_traced(g, u, v).graph;
}

/// Collapses the connected set A to a single vertex (at min(A)'s position).
/// With simplify, parallel classes are reduced to single edges.
inline Contraction contract_vertex_set_traced(const MultiGraph& g,
                                              const VertexSet& A,
                                              bool simplify = false) {
  if (A.empty()) throw Error("contract_vertex_set: empty set");
  if (A.size() > 1 && !g.induced(A).connected())
    throw Error("contract_vertex_set: set does not induce a connected subgraph");
  std::vector<char> in(static_cast<size_t>(g.order()), 0);
  for (int v : A) in[static_cast<size_t>(v)] = 1;
  int rep = A.front();
  std::vector<int> vmap(static_cast<size_t>(g.order()));
  int next = 0;
  for (int w = 0; w < g.order(); ++w) {
    if (w == rep) {
      vmap[static_cast<size_t>(w)] = next++;
    } else if (in[static_cast<size_t>(w)]) {
      vmap[static_cast<size_t>(w)] = -1;  // filled below
    } else {
      vmap[static_cast<size_t>(w)] = next++;
    }
  }
  for (int w = 0; w < g.order(); ++w)
    if (vmap[static_cast<size_t>(w)] < 0)
      vmap[static_cast<size_t>(w)] = vmap[static_cast<size_t>(rep)];
  return detail::contract_by_map(g, vmap, next, simplify);
}

inline MultiGraph contract_vertex_set(const MultiGraph& g, const VertexSet& A,
                                      bool simplify = false) {
  return contract_vertex_set_traced(g, A, simplify).graph;
}

}  // namespace spanwalk

#endif  // SPANWALK_MULTIGRAPH_HPP
