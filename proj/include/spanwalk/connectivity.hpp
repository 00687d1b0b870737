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

#ifndef SPANWALK_CONNECTIVITY_HPP
#define SPANWALK_CONNECTIVITY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "spanwalk/multigraph.hpp"

namespace spanwalk {

namespace detail {

// Unit-capacity digraph with BFS augmentation. Small and quadratic; the
// library only ever runs it on desk-scale graphs.
class UnitFlow {
 public:
  explicit UnitFlow(int nodes) : n_(nodes), cap_(static_cast<size_t>(nodes * nodes), 0) {}

  void add(int a, int b, int c) { cap_[static_cast<size_t>(a * n_ + b)] += c; }

  int max_flow(int s, int t, int limit) {
    int total = 0;
    while (total < limit) {
      std::vector<int> prev(static_cast<size_t>(n_), -1);
      prev[static_cast<size_t>(s)] = s;
      std::vector<int> queue{s};
      for (size_t qi = 0; qi < queue.size() && prev[static_cast<size_t>(t)] < 0; ++qi) {
        int a = queue[qi];
        for (int b = 0; b < n_; ++b)
          if (prev[static_cast<size_t>(b)] < 0 && cap_[static_cast<size_t>(a * n_ + b)] > 0) {
            prev[static_cast<size_t>(b)] = a;
            queue.push_back(b);
          }
      }
      if (prev[static_cast<size_t>(t)] < 0) break;
      for (int b = t; b != s; b = prev[static_cast<size_t>(b)]) {
        int a = prev[static_cast<size_t>(b)];
        --cap_[static_cast<size_t>(a * n_ + b)];
        ++cap_[static_cast<size_t>(b * n_ + a)];
      }
      ++total;
    }
    return total;
  }

  int residual(int a, int b) const { return cap_[static_cast<size_t>(a * n_ + b)]; }

 private:
  int n_;
  std::vector<int> cap_;
};

// Vertex-split flow network over the underlying simple graph:
// node 2v = v_in, 2v+1 = v_out. Terminals get unbounded through-capacity.
inline UnitFlow split_network(const MultiGraph& g, const std::vector<int>& terminals) {
  int n = g.order();
  UnitFlow f(2 * n);
  for (int v = 0; v < n; ++v) {
    bool term = std::find(terminals.begin(), terminals.end(), v) != terminals.end();
    f.add(2 * v, 2 * v + 1, term ? n : 1);
  }
  for (const MultiGraph::Pair& p : g.pairs()) {
    f.add(2 * p.u + 1, 2 * p.v, 1);
    f.add(2 * p.v + 1, 2 * p.u, 1);
  }
  return f;
}

inline int vertex_flow(const MultiGraph& g, int s, int t, int limit) {
  UnitFlow f = split_network(g, {s, t});
  return f.max_flow(2 * s + 1, 2 * t, limit);
}

}  // namespace detail

/// Minimum number of vertices whose removal disconnects the underlying
/// simple graph or shrinks it to one vertex. K_n yields n-1; a disconnected
/// input yields 0. Multiplicities never matter here.
inline int vertex_connectivity(const MultiGraph& g) {
  int n = g.order();
  if (n <= 1) return 0;
  if (!g.connected()) return 0;
  int best = n - 1;
  bool any_pair = false;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      any_pair = true;
      best = std::min(best, detail::vertex_flow(g, s, t, best));
      if (best == 0) return 0;
    }
  return any_pair ? best : n - 1;
}

inline bool is_k_connected(const MultiGraph& g, int k) {
  if (g.order() < k + 1) return false;
  return vertex_connectivity(g) >= k;
}

inline bool is_3_connected(const MultiGraph& g) { return is_k_connected(g, 3); }

/// Contraction keeps the graph 3-connected (on at least 4 vertices).
inline bool is_contractible_edge(const MultiGraph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw Error("is_contractible_edge: no edge {" + std::to_string(u) + "," +
                std::to_string(v) + "}");
  MultiGraph h = contract_edge(g, u, v);
  return h.order() >= 4 && is_3_connected(h);
}

/// 3-connected, and deleting any single edge copy destroys 3-connectivity.
inline bool is_minimally_3_connected(const MultiGraph& g) {
  if (!is_3_connected(g)) return false;
  for (const MultiGraph::Pair& p : g.pairs())
    if (is_3_connected(g.remove_edge(p.u, p.v))) return false;
  return true;
}

struct HalinCheck {
  std::string property;
  enum class Status { pass, fail, skip } status;
  std::string witness;  // concrete edge/vertex/cycle for failures
};

struct HalinReport {
  uint64_t graph_id = 0;
  std::vector<HalinCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const HalinCheck& c) {
      return c.status != HalinCheck::Status::fail;
    });
  }
};

namespace detail {

// Any cycle in g, as a closed vertex sequence; parallel pairs count.
inline std::optional<std::vector<int>> find_cycle(const MultiGraph& g) {
  for (const MultiGraph::Pair& p : g.pairs())
    if (p.mult >= 2) return std::vector<int>{p.u, p.v, p.u};
  int n = g.order();
  std::vector<int> parent(static_cast<size_t>(n), -2);
  for (int root = 0; root < n; ++root) {
    if (parent[static_cast<size_t>(root)] != -2) continue;
    parent[static_cast<size_t>(root)] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (w == parent[static_cast<size_t>(v)]) continue;
        if (parent[static_cast<size_t>(w)] != -2) {
          // Back edge: climb both endpoints to the root to assemble a cycle.
          std::vector<int> pv{v}, pw{w};
          for (int x = v; x != -1; x = parent[static_cast<size_t>(x)]) pv.push_back(x);
          for (int x = w; x != -1; x = parent[static_cast<size_t>(x)]) pw.push_back(x);
          // Find deepest common vertex.
          for (int a : pv) {
            auto it = std::find(pw.begin(), pw.end(), a);
            if (it == pw.end()) continue;
            std::vector<int> cycle;
            for (int x = v; x != a; x = parent[static_cast<size_t>(x)]) cycle.push_back(x);
            cycle.push_back(a);
            std::vector<int> back;
            for (int x = w; x != a; x = parent[static_cast<size_t>(x)]) back.push_back(x);
            std::reverse(back.begin(), back.end());
            for (int x : back) cycle.push_back(x);
            cycle.push_back(v);
            if (cycle.size() >= 4) return cycle;  // at least a triangle
            break;
          }
          continue;
        }
        parent[static_cast<size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  return std::nullopt;
}

inline std::string edge_str(int u, int v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace detail

/// Exhaustive check of the structural properties every minimally 3-connected
/// graph must have. A failure is an implementation bug somewhere; the report
/// is the debugging artifact.
inline HalinReport verify_halin_properties(const MultiGraph& g) {
  if (!is_minimally_3_connected(g))
    throw Error("verify_halin_properties: input is not minimally 3-connected");
  HalinReport report;
  report.graph_id = g.hash64();
  int n = g.order();

  std::vector<int> v3;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 3) v3.push_back(v);
  std::vector<char> in_v3(static_cast<size_t>(n), 0);
  for (int v : v3) in_v3[static_cast<size_t>(v)] = 1;
  bool is_k4 = (n == 4 && g.edge_count() == 6 && g.is_simple());

  {
    HalinCheck c{"V3-nonempty", HalinCheck::Status::pass, ""};
    if (v3.empty()) {
      c.status = HalinCheck::Status::fail;
      c.witness = "V3(G) is empty";
    }
    report.checks.push_back(c);
  }
  {
    HalinCheck c{"deg3-has-contractible-edge", HalinCheck::Status::pass, ""};
    if (is_k4) {
      c.status = HalinCheck::Status::skip;
      c.witness = "K4 excluded";
    } else {
      for (int v : v3) {
        bool ok = false;
        for (int w : g.neighbors(v))
          if (is_contractible_edge(g, v, w)) {
            ok = true;
            break;
          }
        if (!ok) {
          c.status = HalinCheck::Status::fail;
          c.witness = "vertex " + std::to_string(v);
          break;
        }
      }
    }
    report.checks.push_back(c);
  }
  {
    HalinCheck c{"high-high-edges-contractible", HalinCheck::Status::pass, ""};
    for (const MultiGraph::Pair& p : g.pairs())
      if (!in_v3[static_cast<size_t>(p.u)] && !in_v3[static_cast<size_t>(p.v)] &&
          !is_contractible_edge(g, p.u, p.v)) {
        c.status = HalinCheck::Status::fail;
        c.witness = detail::edge_str(p.u, p.v);
        break;
      }
    report.checks.push_back(c);
  }
  {
    HalinCheck c{"contraction-preserves-minimality", HalinCheck::Status::pass, ""};
    for (const MultiGraph::Pair& p : g.pairs())
      if (!in_v3[static_cast<size_t>(p.u)] && !in_v3[static_cast<size_t>(p.v)] &&
          !is_minimally_3_connected(contract_edge(g, p.u, p.v))) {
        c.status = HalinCheck::Status::fail;
        c.witness = detail::edge_str(p.u, p.v);
        break;
      }
    report.checks.push_back(c);
  }
  {
    // Every cycle meets V3 twice <=> G - V3 is acyclic and no single V3
    // vertex closes a cycle with the rest.
    HalinCheck c{"cycle-has-two-V3", HalinCheck::Status::pass, ""};
    VertexSet rest;
    for (int v = 0; v < n; ++v)
      if (!in_v3[static_cast<size_t>(v)]) rest.push_back(v);
    auto check_acyclic = [&](VertexSet set) -> std::optional<std::vector<int>> {
      return detail::find_cycle(g.induced(set));
    };
    if (auto cyc = check_acyclic(rest)) {
      c.status = HalinCheck::Status::fail;
      c.witness = "cycle avoiding V3";
    } else {
      for (int w : v3) {
        VertexSet set = rest;
        set.insert(std::lower_bound(set.begin(), set.end(), w), w);
        if (check_acyclic(set)) {
          c.status = HalinCheck::Status::fail;
          c.witness = "cycle meeting V3 only at " + std::to_string(w);
          break;
        }
      }
    }
    report.checks.push_back(c);
  }
  return report;
}

namespace detail {

// Decompose unit flow leaving `src_out` into paths over the split network.
inline std::vector<std::vector<int>> flow_paths(const MultiGraph& g,
                                                detail::UnitFlow& before,
                                                detail::UnitFlow& after, int src) {
  int n = g.order();
  std::vector<std::vector<int>> used(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    used[static_cast<size_t>(a)] = {};
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      int sent = before.residual(2 * a + 1, 2 * b) - after.residual(2 * a + 1, 2 * b);
      for (int c = 0; c < sent; ++c) used[static_cast<size_t>(a)].push_back(b);
    }
  }
  std::vector<std::vector<int>> paths;
  while (!used[static_cast<size_t>(src)].empty()) {
    std::vector<int> path{src};
    int v = src;
    while (!used[static_cast<size_t>(v)].empty()) {
      int w = used[static_cast<size_t>(v)].back();
      used[static_cast<size_t>(v)].pop_back();
      path.push_back(w);
      v = w;
    }
    paths.push_back(path);
  }
  return paths;
}

}  // namespace detail

/// A simple cycle through every vertex of T (|T| <= 3); guaranteed to exist
/// in a 3-connected graph. Built from two disjoint paths plus a three-path
/// fan, all via unit-capacity flow.
inline std::vector<int> cycle_through(const MultiGraph& g, const VertexSet& T) {
  if (T.size() > 3) throw Error("cycle_through: |T| > 3 unsupported");
  int n = g.order();
  VertexSet targets = T;
  for (int v = 0; v < n && targets.size() < 3; ++v)
    if (std::find(targets.begin(), targets.end(), v) == targets.end())
      targets.push_back(v);
  if (targets.size() < 3) throw Error("cycle_through: graph too small");
  int a = targets[0], b = targets[1], c = targets[2];

  // Two internally disjoint a-b paths form the base cycle.
  detail::UnitFlow before = detail::split_network(g, {a, b});
  detail::UnitFlow f = before;
  if (f.max_flow(2 * a + 1, 2 * b, 2) < 2)
    throw Error("cycle_through: input is not 3-connected");
  auto ab_paths = detail::flow_paths(g, before, f, a);
  std::vector<int> cycle = ab_paths[0];
  for (size_t i = ab_paths[1].size() - 1; i > 0; --i) cycle.push_back(ab_paths[1][i - 1]);
  // cycle: a ... b ... back to a (closed; first == last)

  auto on_cycle = [&](int v) {
    return std::find(cycle.begin(), cycle.end() - 1, v) != cycle.end() - 1;
  };
  if (on_cycle(c)) return cycle;

  // Fan: three internally disjoint paths from c to distinct cycle vertices.
  int super = 2 * n;
  detail::UnitFlow fan_before(2 * n + 1);
  {
    for (int v = 0; v < n; ++v) fan_before.add(2 * v, 2 * v + 1, v == c ? n : 1);
    for (const MultiGraph::Pair& p : g.pairs()) {
      fan_before.add(2 * p.u + 1, 2 * p.v, 1);
      fan_before.add(2 * p.v + 1, 2 * p.u, 1);
    }
    for (size_t i = 0; i + 1 < cycle.size(); ++i)
      fan_before.add(2 * cycle[i] + 1, super, 1);
  }
  detail::UnitFlow fan = fan_before;
  if (fan.max_flow(2 * c + 1, super, 3) < 3)
    throw Error("cycle_through: fan construction failed; input not 3-connected");
  // Recover the three c->cycle paths, truncated at first cycle contact.
  std::vector<std::vector<int>> used(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      int sent = fan_before.residual(2 * x + 1, 2 * y) - fan.residual(2 * x + 1, 2 * y);
      for (int k = 0; k < sent; ++k) used[static_cast<size_t>(x)].push_back(y);
    }
  std::vector<std::vector<int>> fan_paths;
  for (int rep = 0; rep < 3; ++rep) {
    std::vector<int> path{c};
    int v = c;
    while (!on_cycle(v)) {
      if (used[static_cast<size_t>(v)].empty())
        throw Error("cycle_through: flow decomposition failed");
      int w = used[static_cast<size_t>(v)].back();
      used[static_cast<size_t>(v)].pop_back();
      path.push_back(w);
      v = w;
    }
    fan_paths.push_back(path);
  }

  // Arc selection: the three attachment points cut the cycle into arcs; at
  // least one arc has neither a nor b in its interior. Splice c in there.
  std::vector<int> ring(cycle.begin(), cycle.end() - 1);
  auto ring_pos = [&](int v) {
    return static_cast<int>(std::find(ring.begin(), ring.end(), v) - ring.begin());
  };
  std::vector<int> att;
  for (auto& p : fan_paths) att.push_back(p.back());
  std::sort(att.begin(), att.end(), [&](int x, int y) { return ring_pos(x) < ring_pos(y); });
  int L = static_cast<int>(ring.size());
  for (int i = 0; i < 3; ++i) {
    int q1 = att[static_cast<size_t>(i)], q2 = att[static_cast<size_t>((i + 1) % 3)];
    int p1 = ring_pos(q1), p2 = ring_pos(q2);
    bool blocked = false;
    for (int p = (p1 + 1) % L; p != p2; p = (p + 1) % L)
      if (ring[static_cast<size_t>(p)] == a || ring[static_cast<size_t>(p)] == b) {
        blocked = true;
        break;
      }
    if (blocked) continue;
    // New cycle: q2 ->(along ring)-> q1 -> c -> q2.
    std::vector<int> out;
    for (int p = p2; p != p1; p = (p + 1) % L) out.push_back(ring[static_cast<size_t>(p)]);
    out.push_back(q1);
    const std::vector<int>*first = nullptr, *second = nullptr;
    for (auto& fp : fan_paths) {
      if (fp.back() == q1) first = &fp;
      if (fp.back() == q2) second = &fp;
    }
    for (size_t j = first->size() - 1; j > 0; --j) out.push_back((*first)[j - 1]);
    // Walking c -> q2 closes the cycle at out.front() == q2.
    for (size_t j = 1; j < second->size(); ++j) out.push_back((*second)[j]);
    return out;
  }
  throw Error("cycle_through: no spliceable arc found");
}

}  // namespace spanwalk

#endif  // SPANWALK_CONNECTIVITY_HPP
