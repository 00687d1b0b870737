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

#ifndef SPANWALK_HYPOTHESES_HPP
#define SPANWALK_HYPOTHESES_HPP

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "spanwalk/connectivity.hpp"
#include "spanwalk/multigraph.hpp"
#include "spanwalk/rational.hpp"
#include "spanwalk/tree_connectivity.hpp"
#include "spanwalk/walks.hpp"

namespace spanwalk {

/// Outcome of sweeping a component/deficiency inequality over vertex
/// subsets. left/right are the two sides at the worst subset, exact.
struct HypothesisReport {
  std::string lemma;  // "walk" or "trail"
  int k = 0;
  VertexSet worst_subset;
  Rational left, right;
  bool satisfied = false;
  std::optional<EulerianCertificate> fallback;  // bounded-walk certificate
};

class CutWalkOverload : public Error {
 public:
  explicit CutWalkOverload(std::vector<int> load_vector)
      : Error("construct_cut_walk: attachment forces a cut vertex above its cap"),
        loads(std::move(load_vector)) {}
  std::vector<int> loads;  // visits per cut vertex, in S order
};

namespace detail {

inline VertexSet mask_to_set(uint32_t mask, int n) {
  VertexSet out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

}  // namespace detail

/// Sweeps every S inside the independent set X against
///   omega(G \ S) <= (k - 1/2)|S| + 1,
/// in exact arithmetic. When a subset violates it and use_fallback is set,
/// the second sufficient condition is tried: a spanning closed walk meeting
/// each vertex of S at most k times.
inline HypothesisReport check_walk_hypothesis(const MultiGraph& g,
                                              const VertexSet& X, int k,
                                              bool use_fallback,
                                              Deadline deadline = Deadline::none()) {
  int n = g.order();
  if (n > 20) throw Error("check_walk_hypothesis: n > 20 unsupported");
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = i + 1; j < X.size(); ++j)
      if (g.has_edge(X[i], X[j]))
        throw Error("check_walk_hypothesis: X is not independent");

  HypothesisReport report;
  report.lemma = "walk";
  report.k = k;
  long long worst_slack_num = 0;  // slack scaled by 2: 2*omega - ((2k-1)|S|+2)
  bool have_worst = false;
  std::vector<uint32_t> violating;
  for (uint32_t mask = 0; mask < (1u << X.size()); ++mask) {
    deadline.check();
    VertexSet S;
    for (size_t i = 0; i < X.size(); ++i)
      if (mask >> i & 1) S.push_back(X[i]);
    long long omega = count_components(g, S);
    long long slack2 = 2 * omega - ((2LL * k - 1) * static_cast<long long>(S.size()) + 2);
    if (!have_worst || slack2 > worst_slack_num) {
      have_worst = true;
      worst_slack_num = slack2;
      report.worst_subset = S;
      report.left = Rational(omega);
      report.right = Rational::halves((2LL * k - 1) * static_cast<long long>(S.size()) + 2);
    }
    if (slack2 > 0) violating.push_back(mask);
  }
  if (violating.empty()) {
    report.satisfied = true;
    return report;
  }
  if (!use_fallback) {
    report.satisfied = false;
    return report;
  }
  report.satisfied = true;
  for (uint32_t mask : violating) {
    std::vector<int> caps(static_cast<size_t>(n), n);  // unbounded elsewhere
    VertexSet S;
    for (size_t i = 0; i < X.size(); ++i)
      if (mask >> i & 1) {
        S.push_back(X[i]);
        caps[static_cast<size_t>(X[i])] = k;
      }
    auto cert = find_bounded_walk(g, caps, CertKind::walk, deadline);
    if (!cert) {
      report.satisfied = false;
      report.worst_subset = S;
      report.left = Rational(count_components(g, S));
      report.right = Rational::halves((2LL * k - 1) * static_cast<long long>(S.size()) + 2);
      report.fallback.reset();
      return report;
    }
    if (!report.fallback) report.fallback = std::move(cert);
  }
  return report;
}

/// Sweeps every S subset of V(G) against
///   Omega(G \ S) <= (k - 1/2)|S| + 1 - e_G(S)/2,
/// in exact arithmetic, sharing one subset-marking pass for all the
/// decompositions of induced subgraphs.
inline HypothesisReport check_trail_hypothesis(const MultiGraph& g, int k,
                                               Deadline deadline = Deadline::none()) {
  int n = g.order();
  if (n > 14) throw Error("check_trail_hypothesis: n > 14 unsupported");
  HypothesisReport report;
  report.lemma = "trail";
  report.k = k;
  if (n == 0) {
    report.satisfied = true;
    report.left = Rational(0);
    report.right = Rational(1);
    return report;
  }
  detail::TcMarks marks(g, 2);
  uint32_t full = (1u << n) - 1;
  bool have_worst = false;
  long long worst_slack2 = 0;
  bool ok = true;
  for (uint32_t smask = 0; smask <= full; ++smask) {
    deadline.check();
    uint32_t world = full & ~smask;
    auto part_masks = marks.parts_of(world);
    int inside = 0;
    for (uint32_t pm : part_masks) inside += marks.edges_in(pm);
    int crossing = marks.edges_in(world) - inside;
    long long omega2 = 2LL * static_cast<long long>(part_masks.size()) - crossing;
    int ssize = std::popcount(smask);
    long long rhs2 = (2LL * k - 1) * ssize + 2 - marks.edges_in(smask);
    long long slack2 = omega2 - rhs2;
    if (slack2 > 0) ok = false;
    if (!have_worst || slack2 > worst_slack2) {
      have_worst = true;
      worst_slack2 = slack2;
      report.worst_subset = detail::mask_to_set(smask, n);
      report.left = Rational::halves(omega2);
      report.right = Rational::halves(rhs2);
    }
  }
  report.satisfied = ok;
  return report;
}

/// The equality-case construction: a spanning closed walk meeting each of
/// the three independent cut vertices S at most k times. A cycle through S
/// seeds the walk; unmet components attach by a doubled edge to the least
/// loaded cut vertex; component interiors ride doubled BFS-forest edges.
inline EulerianCertificate construct_cut_walk(const MultiGraph& g,
                                              const VertexSet& S, int k) {
  if (S.size() != 3) throw Error("construct_cut_walk: |S| must be 3");
  if (!is_3_connected(g)) throw Error("construct_cut_walk: input not 3-connected");
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j)
      if (g.has_edge(S[i], S[j]))
        throw Error("construct_cut_walk: S is not independent");
  int n = g.order();
  std::vector<char> in_s(static_cast<size_t>(n), 0);
  for (int v : S) in_s[static_cast<size_t>(v)] = 1;

  // Components of G \ S and their neighbourhoods in S.
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (in_s[static_cast<size_t>(s)] || comp[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<size_t>(s)] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (!in_s[static_cast<size_t>(w)] && comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    int nbrs = 0;
    for (int s : S) {
      bool touches = false;
      for (int w : g.neighbors(s))
        if (!in_s[static_cast<size_t>(w)] && comp[static_cast<size_t>(w)] == c)
          touches = true;
      if (touches) ++nbrs;
    }
    if (nbrs < 3)
      throw Error("construct_cut_walk: a component has only " +
                  std::to_string(nbrs) + " neighbors in S");
  }

  std::vector<int> cycle = cycle_through(g, S);
  std::vector<int> usage(g.pairs().size(), 0);
  auto add = [&](int u, int v, int m) {
    if (u > v) std::swap(u, v);
    for (size_t i = 0; i < g.pairs().size(); ++i)
      if (g.pairs()[i].u == u && g.pairs()[i].v == v) {
        usage[i] += m;
        return;
      }
    throw Error("construct_cut_walk: missing edge");
  };
  for (size_t i = 0; i + 1 < cycle.size(); ++i) add(cycle[i], cycle[i + 1], 1);

  std::vector<char> met(static_cast<size_t>(ncomp), 0);
  std::vector<char> on_cycle(static_cast<size_t>(n), 0);
  for (size_t i = 0; i + 1 < cycle.size(); ++i) {
    on_cycle[static_cast<size_t>(cycle[i])] = 1;
    if (!in_s[static_cast<size_t>(cycle[i])])
      met[static_cast<size_t>(comp[static_cast<size_t>(cycle[i])])] = 1;
  }

  // Attach unmet components round-robin to the least loaded cut vertex.
  std::vector<int> loads(3, 0);
  std::vector<std::vector<int>> roots(static_cast<size_t>(ncomp));
  for (int c = 0; c < ncomp; ++c) {
    if (met[static_cast<size_t>(c)]) {
      for (int v = 0; v < n; ++v)
        if (!in_s[static_cast<size_t>(v)] && comp[static_cast<size_t>(v)] == c &&
            on_cycle[static_cast<size_t>(v)])
          roots[static_cast<size_t>(c)].push_back(v);
      continue;
    }
    int best = 0;
    for (int i = 1; i < 3; ++i)
      if (loads[static_cast<size_t>(i)] < loads[static_cast<size_t>(best)]) best = i;
    int s = S[static_cast<size_t>(best)];
    int u = -1;
    for (int w : g.neighbors(s))
      if (!in_s[static_cast<size_t>(w)] && comp[static_cast<size_t>(w)] == c) {
        u = w;
        break;
      }
    if (u < 0) throw Error("construct_cut_walk: attachment edge vanished");
    add(s, u, 2);
    ++loads[static_cast<size_t>(best)];
    roots[static_cast<size_t>(c)].push_back(u);
  }
  for (int i = 0; i < 3; ++i)
    if (1 + loads[static_cast<size_t>(i)] > k) {
      std::vector<int> visits(3);
      for (int j = 0; j < 3; ++j) visits[static_cast<size_t>(j)] = 1 + loads[static_cast<size_t>(j)];
      throw CutWalkOverload(visits);
    }

  // Cover component interiors by doubled BFS-forest edges rooted at the
  // cycle contacts / attachment points.
  for (int c = 0; c < ncomp; ++c) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> queue;
    for (int r : roots[static_cast<size_t>(c)]) {
      seen[static_cast<size_t>(r)] = 1;
      queue.push_back(r);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int w : g.neighbors(v)) {
        if (in_s[static_cast<size_t>(w)] || comp[static_cast<size_t>(w)] != c ||
            seen[static_cast<size_t>(w)])
          continue;
        seen[static_cast<size_t>(w)] = 1;
        add(v, w, 2);
        queue.push_back(w);
      }
    }
  }

  EulerianCertificate out(g, CertKind::walk, std::move(usage));
  out.validate();
  return out;
}

}  // namespace spanwalk

#endif  // SPANWALK_HYPOTHESES_HPP
