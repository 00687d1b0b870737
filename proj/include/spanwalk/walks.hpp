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

#ifndef SPANWALK_WALKS_HPP
#define SPANWALK_WALKS_HPP

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "spanwalk/multigraph.hpp"

namespace spanwalk {

class TimeoutError : public Error {
 public:
  TimeoutError() : Error("operation timed out") {}
};

/// Cooperative deadline handed into the exhaustive searches.
struct Deadline {
  std::optional<std::chrono::steady_clock::time_point> at;

  static Deadline none() { return {}; }
  static Deadline after_ms(long long ms) {
    return {std::chrono::steady_clock::now() + std::chrono::milliseconds(ms)};
  }
  bool expired() const {
    return at && std::chrono::steady_clock::now() > *at;
  }
  void check() const {
    if (expired()) throw TimeoutError();
  }
};

enum class CertKind { walk, trail };

/// Edge-multiplicity encoding of a spanning closed walk or trail: usage per
/// distinct edge pair, support spanning and connected, all degrees even.
/// A k-walk is exactly such a certificate with max degree <= 2k.
class EulerianCertificate {
 public:
  EulerianCertificate(MultiGraph host, CertKind kind, std::vector<int> usage)
      : host_(std::move(host)), kind_(kind), usage_(std::move(usage)) {}

  const MultiGraph& host() const { return host_; }
  CertKind kind() const { return kind_; }
  const std::vector<int>& usage() const { return usage_; }

  int usage_of(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (size_t i = 0; i < host_.pairs().size(); ++i)
      if (host_.pairs()[i].u == u && host_.pairs()[i].v == v)
        return usage_[i];
    return 0;
  }

  int deg_mult(int v) const {
    int d = 0;
    for (size_t i = 0; i < host_.pairs().size(); ++i)
      if (host_.pairs()[i].u == v || host_.pairs()[i].v == v) d += usage_[i];
    return d;
  }

  /// Times the traversal meets v (base point's two end occurrences count once).
  int visits(int v) const {
    if (host_.order() == 1) return 1;
    return deg_mult(v) / 2;
  }

  std::vector<int> all_visits() const {
    std::vector<int> out(static_cast<size_t>(host_.order()));
    for (int v = 0; v < host_.order(); ++v)
      out[static_cast<size_t>(v)] = visits(v);
    return out;
  }

  int max_visits() const {
    int mx = 0;
    for (int v = 0; v < host_.order(); ++v) mx = std::max(mx, visits(v));
    return mx;
  }

  /// Full from-scratch revalidation of the type invariants.
  void validate() const {
    if (usage_.size() != host_.pairs().size())
      throw Error("certificate: usage vector size mismatch");
    if (host_.order() == 0) throw Error("certificate: empty host");
    if (host_.order() == 1) {
      for (int m : usage_)
        if (m != 0) throw Error("certificate: single-vertex host with edges");
      return;
    }
    for (size_t i = 0; i < usage_.size(); ++i) {
      int m = usage_[i];
      int cap = kind_ == CertKind::walk
                    ? 2
                    : std::min(host_.pairs()[i].mult, 2);
      if (m < 0 || m > cap)
        throw Error("certificate: usage " + std::to_string(m) +
                    " out of range on pair index " + std::to_string(i));
    }
    std::vector<int> deg(static_cast<size_t>(host_.order()), 0);
    for (size_t i = 0; i < usage_.size(); ++i) {
      deg[static_cast<size_t>(host_.pairs()[i].u)] += usage_[i];
      deg[static_cast<size_t>(host_.pairs()[i].v)] += usage_[i];
    }
    for (int v = 0; v < host_.order(); ++v) {
      if (deg[static_cast<size_t>(v)] < 2)
        throw Error("certificate: vertex " + std::to_string(v) + " uncovered");
      if (deg[static_cast<size_t>(v)] % 2 != 0)
        throw Error("certificate: odd degree at vertex " + std::to_string(v));
    }
    // Support connectivity.
    MultiGraph support(host_.order());
    for (size_t i = 0; i < usage_.size(); ++i)
      if (usage_[i] > 0)
        support.add_edge(host_.pairs()[i].u, host_.pairs()[i].v);
    if (!support.connected())
      throw Error("certificate: support is disconnected");
  }

  bool is_valid() const {
    try {
      validate();
      return true;
    } catch (const Error&) {
      return false;
    }
  }

 private:
  MultiGraph host_;
  CertKind kind_;
  std::vector<int> usage_;
};

namespace detail {

// Exact backtracking over per-pair usages, ordered so each vertex's incident
// pairs finish in a contiguous block; completion forces parity, coverage and
// cap checks, and closed support components prune the branch.
class BoundedWalkSearch {
 public:
  BoundedWalkSearch(const MultiGraph& g, const std::vector<int>& caps,
                    CertKind kind, Deadline deadline)
      : g_(g), caps_(caps), kind_(kind), deadline_(deadline) {
    n_ = g.order();
    const auto& ps = g.pairs();
    np_ = static_cast<int>(ps.size());
    maxuse_.resize(static_cast<size_t>(np_));
    for (int i = 0; i < np_; ++i)
      maxuse_[static_cast<size_t>(i)] =
          kind == CertKind::walk ? 2 : std::min(ps[static_cast<size_t>(i)].mult, 2);
    undecided_.assign(static_cast<size_t>(n_), 0);
    potential_.assign(static_cast<size_t>(n_), 0);
    for (int i = 0; i < np_; ++i) {
      for (int w : {ps[static_cast<size_t>(i)].u, ps[static_cast<size_t>(i)].v}) {
        ++undecided_[static_cast<size_t>(w)];
        potential_[static_cast<size_t>(w)] += maxuse_[static_cast<size_t>(i)];
      }
    }
    deg_.assign(static_cast<size_t>(n_), 0);
    usage_.assign(static_cast<size_t>(np_), 0);
  }

  std::optional<std::vector<int>> run() {
    deadline_.check();
    if (n_ == 1) return std::vector<int>{};
    // A vertex with no chance of reaching degree 2 kills the search upfront.
    for (int v = 0; v < n_; ++v)
      if (potential_[static_cast<size_t>(v)] < 2) return std::nullopt;
    if (search(0)) return usage_;
    return std::nullopt;
  }

 private:
  bool vertex_done_ok(int w) {
    int d = deg_[static_cast<size_t>(w)];
    if (d < 2 || d % 2 != 0) return false;
    if (d > 2 * caps_[static_cast<size_t>(w)]) return false;
    // The support component of w must stay extendable or already cover V.
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::vector<int> stack{w};
    seen[static_cast<size_t>(w)] = 1;
    int reached = 1;
    bool open = false;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      if (undecided_[static_cast<size_t>(a)] > 0) open = true;
      for (int i = 0; i < np_; ++i) {
        if (usage_[static_cast<size_t>(i)] == 0) continue;
        const auto& p = g_.pairs()[static_cast<size_t>(i)];
        int b = -1;
        if (p.u == a) b = p.v;
        else if (p.v == a) b = p.u;
        else continue;
        if (!seen[static_cast<size_t>(b)]) {
          seen[static_cast<size_t>(b)] = 1;
          ++reached;
          stack.push_back(b);
        }
      }
    }
    return open || reached == n_;
  }

  bool search(int i) {
    if (++nodes_ % 8192 == 0) deadline_.check();
    if (i == np_) return finish();
    const auto& p = g_.pairs()[static_cast<size_t>(i)];
    int mx = maxuse_[static_cast<size_t>(i)];
    for (int w : {p.u, p.v}) {
      --undecided_[static_cast<size_t>(w)];
      potential_[static_cast<size_t>(w)] -= mx;
    }
    static constexpr int kOrder[3] = {1, 2, 0};
    for (int m : kOrder) {
      if (m > mx) continue;
      bool ok = true;
      for (int w : {p.u, p.v}) {
        int d = deg_[static_cast<size_t>(w)] + m;
        if (d > 2 * caps_[static_cast<size_t>(w)]) ok = false;
        if (d + potential_[static_cast<size_t>(w)] < 2) ok = false;
      }
      if (!ok) continue;
      usage_[static_cast<size_t>(i)] = m;
      deg_[static_cast<size_t>(p.u)] += m;
      deg_[static_cast<size_t>(p.v)] += m;
      bool feasible = true;
      for (int w : {p.u, p.v})
        if (undecided_[static_cast<size_t>(w)] == 0 && !vertex_done_ok(w)) {
          feasible = false;
          break;
        }
      if (feasible && search(i + 1)) return true;
      deg_[static_cast<size_t>(p.u)] -= m;
      deg_[static_cast<size_t>(p.v)] -= m;
      usage_[static_cast<size_t>(i)] = 0;
    }
    for (int w : {p.u, p.v}) {
      ++undecided_[static_cast<size_t>(w)];
      potential_[static_cast<size_t>(w)] += mx;
    }
    return false;
  }

  bool finish() {
    for (int v = 0; v < n_; ++v) {
      int d = deg_[static_cast<size_t>(v)];
      if (d < 2 || d % 2 != 0 || d > 2 * caps_[static_cast<size_t>(v)])
        return false;
    }
    // Support must be connected (it spans: every degree is >= 2).
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int i = 0; i < np_; ++i) {
        if (usage_[static_cast<size_t>(i)] == 0) continue;
        const auto& p = g_.pairs()[static_cast<size_t>(i)];
        int b = -1;
        if (p.u == a) b = p.v;
        else if (p.v == a) b = p.u;
        else continue;
        if (!seen[static_cast<size_t>(b)]) {
          seen[static_cast<size_t>(b)] = 1;
          ++reached;
          stack.push_back(b);
        }
      }
    }
    return reached == n_;
  }

  const MultiGraph& g_;
  std::vector<int> caps_;
  CertKind kind_;
  Deadline deadline_;
  int n_ = 0, np_ = 0;
  long long nodes_ = 0;
  std::vector<int> maxuse_, undecided_, potential_, deg_, usage_;
};

}  // namespace detail

/// Exact search for a spanning closed walk/trail with visits(v) <= caps[v].
/// Complete: absent means no such certificate exists.
inline std::optional<EulerianCertificate> find_bounded_walk(
    const MultiGraph& g, const std::vector<int>& caps, CertKind kind,
    Deadline deadline = Deadline::none()) {
  if (static_cast<int>(caps.size()) != g.order())
    throw Error("find_bounded_walk: caps size mismatch");
  for (int c : caps)
    if (c < 1) throw Error("find_bounded_walk: caps must be >= 1");
  if (g.order() == 0 || !g.connected()) return std::nullopt;
  detail::BoundedWalkSearch search(g, caps, kind, deadline);
  auto usage = search.run();
  if (!usage) return std::nullopt;
  return EulerianCertificate(g, kind, std::move(*usage));
}

inline std::optional<EulerianCertificate> find_k_walk(
    const MultiGraph& g, int k, Deadline deadline = Deadline::none()) {
  return find_bounded_walk(g, std::vector<int>(static_cast<size_t>(g.order()), k),
                           CertKind::walk, deadline);
}

inline std::optional<EulerianCertificate> find_k_trail(
    const MultiGraph& g, int k, Deadline deadline = Deadline::none()) {
  return find_bounded_walk(g, std::vector<int>(static_cast<size_t>(g.order()), k),
                           CertKind::trail, deadline);
}

/// Least k admitting a k-walk. Always exists for connected hosts: doubling a
/// spanning tree bounds k by the maximum tree degree.
inline int min_walk_number(const MultiGraph& g,
                           Deadline deadline = Deadline::none()) {
  if (!g.connected()) throw Error("min_walk_number: input must be connected");
  if (g.order() == 1) return 1;
  for (int k = 1; k <= g.order(); ++k)
    if (find_k_walk(g, k, deadline)) return k;
  throw Error("min_walk_number: internal error, no walk found");
}

/// Least k admitting a k-trail; absent when no spanning closed trail exists.
inline std::optional<int> min_trail_number(const MultiGraph& g,
                                           Deadline deadline = Deadline::none()) {
  if (!g.connected()) throw Error("min_trail_number: input must be connected");
  if (g.order() == 1) return 1;
  int kmax = 1;
  for (int v = 0; v < g.order(); ++v) kmax = std::max(kmax, g.degree(v) / 2);
  for (int k = 1; k <= kmax; ++k)
    if (find_k_trail(g, k, deadline)) return k;
  return std::nullopt;
}

/// Closed traversal realizing the certificate: each used edge copy appears
/// exactly once; deterministic smallest-neighbor-first circuit extraction.
inline std::vector<int> certificate_to_traversal(const EulerianCertificate& c) {
  const MultiGraph& g = c.host();
  if (g.order() == 1) return {0};
  struct Slot {
    int to;
    int pair;
    bool used = false;
  };
  std::vector<std::vector<Slot>> adj(static_cast<size_t>(g.order()));
  for (size_t i = 0; i < g.pairs().size(); ++i) {
    const auto& p = g.pairs()[i];
    for (int cpy = 0; cpy < c.usage()[i]; ++cpy) {
      adj[static_cast<size_t>(p.u)].push_back({p.v, static_cast<int>(i)});
      adj[static_cast<size_t>(p.v)].push_back({p.u, static_cast<int>(i)});
    }
  }
  for (auto& lst : adj)
    std::stable_sort(lst.begin(), lst.end(),
                     [](const Slot& a, const Slot& b) { return a.to < b.to; });
  // Pair up the two directions of each used copy: walking u->v consumes one
  // slot on each side.
  auto consume = [&](int from, size_t si) {
    Slot& s = adj[static_cast<size_t>(from)][si];
    s.used = true;
    auto& back = adj[static_cast<size_t>(s.to)];
    for (Slot& t : back)
      if (!t.used && t.to == from && t.pair == s.pair) {
        t.used = true;
        return s.to;
      }
    throw Error("traversal: mismatched slot bookkeeping");
  };
  std::vector<int> stack{0}, out;
  while (!stack.empty()) {
    int v = stack.back();
    bool advanced = false;
    auto& lst = adj[static_cast<size_t>(v)];
    for (size_t si = 0; si < lst.size(); ++si) {
      if (lst[si].used) continue;
      stack.push_back(consume(v, si));
      advanced = true;
      break;
    }
    if (!advanced) {
      out.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Visit-count floor for closed spanning walks and trails of a connected
/// bipartite host: traversals alternate sides, so the larger side forces
/// ceil(|B| / |A|) visits somewhere on the smaller side.
inline int bipartite_visit_lower_bound(const MultiGraph& g) {
  int n = g.order();
  if (n == 0 || !g.connected()) return 1;
  std::vector<int> color(static_cast<size_t>(n), -1);
  std::vector<int> queue{0};
  color[0] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int w : g.neighbors(v)) {
      if (color[static_cast<size_t>(w)] < 0) {
        color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
        queue.push_back(w);
      } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
        return 1;  // odd cycle: no bipartite counting bound
      }
    }
  }
  long long a = std::count(color.begin(), color.end(), 0);
  long long b = n - a;
  long long big = std::max(a, b), small = std::min(a, b);
  if (small == 0) return 1;
  return static_cast<int>((big + small - 1) / small);
}

}  // namespace spanwalk

#endif  // SPANWALK_WALKS_HPP
