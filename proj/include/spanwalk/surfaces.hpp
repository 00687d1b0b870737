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

#ifndef SPANWALK_SURFACES_HPP
#define SPANWALK_SURFACES_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spanwalk/multigraph.hpp"
#include "spanwalk/walks.hpp"

namespace spanwalk {

/// Combinatorial embedding: cyclic edge-end orders per vertex plus edge
/// signs. Edges are addressed as instance ids 0..M-1 in a fixed order.
struct SignedRotationSystem {
  MultiGraph host;
  std::vector<std::pair<int, int>> instances;  // instance id -> (u,v), u<v
  std::vector<std::vector<int>> rotation;      // per vertex: instance ids, cyclic
  std::vector<int> sign;                       // per instance: +1 / -1

  void validate() const {
    int n = host.order();
    if (static_cast<int>(rotation.size()) != n)
      throw Error("rotation system: one rotation line per vertex required");
    std::vector<int> ends(instances.size(), 0);
    for (int v = 0; v < n; ++v) {
      if (static_cast<int>(rotation[static_cast<size_t>(v)].size()) != host.degree(v))
        throw Error("rotation system: rotation size differs from degree at vertex " +
                    std::to_string(v));
      for (int e : rotation[static_cast<size_t>(v)]) {
        if (e < 0 || e >= static_cast<int>(instances.size()))
          throw Error("rotation system: edge id out of range");
        auto [a, b] = instances[static_cast<size_t>(e)];
        if (a != v && b != v)
          throw Error("rotation system: edge " + std::to_string(e) +
                      " not incident to vertex " + std::to_string(v));
        ++ends[static_cast<size_t>(e)];
      }
    }
    for (size_t e = 0; e < instances.size(); ++e)
      if (ends[e] != 2)
        throw Error("rotation system: edge " + std::to_string(e) +
                    " must appear exactly once at each end");
    if (sign.size() != instances.size())
      throw Error("rotation system: one sign per edge required");
    for (int s : sign)
      if (s != 1 && s != -1) throw Error("rotation system: signs must be +-1");
  }
};

/// Faces of the embedding, with the Euler characteristic bookkeeping.
struct EmbeddingReport {
  std::vector<std::vector<int>> faces;  // closed edge-id walks, one per face
  int face_count = 0;
  int chi = 0;  // |V| - |E| + F
  bool orientable = false;
};

/// Traces all faces of the embedding scheme. Mechanics: a state is a
/// directed edge instance plus a local side; crossing a negative edge flips
/// the side, and the side selects successor vs predecessor in the rotation.
/// Each face is discovered by exactly two mirror orbits.
inline EmbeddingReport face_trace(const SignedRotationSystem& rs) {
  rs.validate();
  if (!rs.host.connected()) throw Error("face_trace: host must be connected");
  int n = rs.host.order();
  int m = static_cast<int>(rs.instances.size());
  if (n == 1 && m == 0) {
    // A lone vertex sits in a single face of the sphere.
    EmbeddingReport report;
    report.faces = {{}};
    report.face_count = 1;
    report.chi = 2;
    report.orientable = true;
    return report;
  }

  // Position of each edge end inside its vertex rotation.
  std::vector<std::vector<int>> pos(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(m), -1));
  for (int v = 0; v < n; ++v)
    for (size_t i = 0; i < rs.rotation[static_cast<size_t>(v)].size(); ++i)
      pos[static_cast<size_t>(v)][static_cast<size_t>(
          rs.rotation[static_cast<size_t>(v)][i])] = static_cast<int>(i);

  // State encoding: ((edge * 2 + dir) * 2 + side); dir 0 = low->high.
  auto head = [&](int e, int dir) {
    auto [a, b] = rs.instances[static_cast<size_t>(e)];
    return dir == 0 ? b : a;
  };
  auto step = [&](int state) {
    int side = state & 1;
    int dir = (state >> 1) & 1;
    int e = state >> 2;
    int nside = side ^ (rs.sign[static_cast<size_t>(e)] < 0 ? 1 : 0);
    int v = head(e, dir);
    const auto& rot = rs.rotation[static_cast<size_t>(v)];
    int d = static_cast<int>(rot.size());
    int at = pos[static_cast<size_t>(v)][static_cast<size_t>(e)];
    int ne = rot[static_cast<size_t>((at + (nside == 0 ? 1 : d - 1)) % d)];
    auto [a, b] = rs.instances[static_cast<size_t>(ne)];
    int ndir = (v == a) ? 0 : 1;  // leaving v along ne
    return (ne * 2 + ndir) * 2 + nside;
  };
  auto mirror = [&](int state) {
    int side = state & 1;
    int dir = (state >> 1) & 1;
    int e = state >> 2;
    int nside = side ^ 1 ^ (rs.sign[static_cast<size_t>(e)] < 0 ? 1 : 0);
    return (e * 2 + (dir ^ 1)) * 2 + nside;
  };

  std::vector<int> orbit_of(static_cast<size_t>(4 * m), -1);
  std::vector<std::vector<int>> orbits;
  for (int s0 = 0; s0 < 4 * m; ++s0) {
    if (orbit_of[static_cast<size_t>(s0)] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<int> orbit;
    for (int s = s0; orbit_of[static_cast<size_t>(s)] < 0; s = step(s)) {
      orbit_of[static_cast<size_t>(s)] = id;
      orbit.push_back(s);
    }
    orbits.push_back(std::move(orbit));
  }

  EmbeddingReport report;
  std::vector<char> emitted(orbits.size(), 0);
  for (size_t i = 0; i < orbits.size(); ++i) {
    if (emitted[i]) continue;
    int twin = orbit_of[static_cast<size_t>(mirror(orbits[i].front()))];
    if (twin == static_cast<int>(i))
      throw Error("face_trace: degenerate self-mirror face");
    emitted[i] = 1;
    emitted[static_cast<size_t>(twin)] = 1;
    std::vector<int> face;
    for (int s : orbits[i]) face.push_back(s >> 2);
    report.faces.push_back(std::move(face));
  }
  report.face_count = static_cast<int>(report.faces.size());
  report.chi = n - m + report.face_count;

  // Orientable iff vertex flips can clear every negative sign: 2-colour the
  // flip constraints f(u) xor f(v) = [sign < 0].
  std::vector<int> colour(static_cast<size_t>(n), -1);
  report.orientable = true;
  for (int s = 0; s < n && report.orientable; ++s) {
    if (colour[static_cast<size_t>(s)] >= 0) continue;
    colour[static_cast<size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size() && report.orientable; ++qi) {
      int v = queue[qi];
      for (int e = 0; e < m; ++e) {
        auto [a, b] = rs.instances[static_cast<size_t>(e)];
        if (a != v && b != v) continue;
        int w = a == v ? b : a;
        int need = colour[static_cast<size_t>(v)] ^
                   (rs.sign[static_cast<size_t>(e)] < 0 ? 1 : 0);
        if (colour[static_cast<size_t>(w)] < 0) {
          colour[static_cast<size_t>(w)] = need;
          queue.push_back(w);
        } else if (colour[static_cast<size_t>(w)] != need) {
          report.orientable = false;
          break;
        }
      }
    }
  }
  return report;
}

/// Euler-formula edge bounds: 2n - 2*chi for triangle-free hosts, 3n - 3*chi
/// otherwise.
inline bool edge_bound_check(int n, int m, int chi, bool triangle_free) {
  if (n < 3) throw Error("edge_bound_check: n >= 3 required");
  if (chi > 2) throw Error("edge_bound_check: chi <= 2 required");
  long long bound = triangle_free ? 2LL * n - 2LL * chi : 3LL * n - 3LL * chi;
  return m <= bound;
}

inline int walk_bound(int chi) {
  if (chi > 0) throw Error("walk_bound: requires chi <= 0");
  return static_cast<int>((6LL - 2LL * chi + 2) / 3);  // ceil((6-2chi)/3)
}

inline int trail_bound(int chi) {
  if (chi > 0) throw Error("trail_bound: requires chi <= 0");
  return static_cast<int>((6LL - 3LL * chi + 3) / 4);  // ceil((6-3chi)/4)
}

inline int conjecture_lower_bound(int chi) {
  long long num = 4LL - chi;
  if (num <= 0) return static_cast<int>(num / 4);  // truncation is ceil here
  return static_cast<int>((num + 3) / 4);          // ceil((4-chi)/4)
}

/// All-rotations search for the best (maximum) achievable Euler
/// characteristic; stops early once chi_floor is reached. Sum of degrees is
/// capped because the rotation space explodes factorially.
struct GenusSearchResult {
  int chi;
  SignedRotationSystem witness;
};

namespace detail {

inline void permute_rotations(const MultiGraph& g,
                              std::vector<std::vector<int>>& incident,
                              SignedRotationSystem& rs, size_t v, int chi_floor,
                              std::optional<GenusSearchResult>& best,
                              const std::vector<int>& cotree, Deadline deadline) {
  if (best && best->chi >= chi_floor) return;
  deadline.check();
  if (v == incident.size()) {
    size_t ncot = cotree.size();
    for (uint32_t smask = 0; smask < (1u << ncot); ++smask) {
      for (size_t i = 0; i < ncot; ++i)
        rs.sign[static_cast<size_t>(cotree[i])] = (smask >> i & 1) ? -1 : 1;
      EmbeddingReport rep = face_trace(rs);
      if (!best || rep.chi > best->chi) best = GenusSearchResult{rep.chi, rs};
      if (best->chi >= chi_floor) return;
    }
    return;
  }
  auto& rot = incident[v];
  if (rot.empty()) {
    rs.rotation[v] = {};
    permute_rotations(g, incident, rs, v + 1, chi_floor, best, cotree, deadline);
    return;
  }
  // Cyclic orders: fix the first entry, permute the tail. The very first
  // vertex is additionally fixed up to reflection.
  std::vector<int> tail(rot.begin() + 1, rot.end());
  std::sort(tail.begin(), tail.end());
  do {
    if (v == 0 && tail.size() >= 2 && tail.front() > tail.back()) continue;
    rs.rotation[v] = {rot[0]};
    rs.rotation[v].insert(rs.rotation[v].end(), tail.begin(), tail.end());
    permute_rotations(g, incident, rs, v + 1, chi_floor, best, cotree, deadline);
    if (best && best->chi >= chi_floor) return;
  } while (std::next_permutation(tail.begin(), tail.end()));
}

}  // namespace detail

inline GenusSearchResult min_euler_genus_bruteforce(
    const MultiGraph& g, int chi_floor, Deadline deadline = Deadline::none()) {
  int total_deg = 0;
  for (int v = 0; v < g.order(); ++v) total_deg += g.degree(v);
  if (total_deg > 24)
    throw Error("min_euler_genus_bruteforce: degree sum > 24; supply an "
                "explicit rotation file instead");
  if (!g.connected()) throw Error("min_euler_genus_bruteforce: host must be connected");

  SignedRotationSystem rs;
  rs.host = g;
  for (const MultiGraph::Pair& p : g.pairs())
    for (int c = 0; c < p.mult; ++c) rs.instances.push_back({p.u, p.v});
  rs.sign.assign(rs.instances.size(), 1);
  rs.rotation.assign(static_cast<size_t>(g.order()), {});

  std::vector<std::vector<int>> incident(static_cast<size_t>(g.order()));
  for (size_t e = 0; e < rs.instances.size(); ++e) {
    incident[static_cast<size_t>(rs.instances[e].first)].push_back(static_cast<int>(e));
    incident[static_cast<size_t>(rs.instances[e].second)].push_back(static_cast<int>(e));
  }
  // A spanning tree's signs are normalizable to +1 by vertex flips; only
  // co-tree edges need both signs.
  std::vector<int> cotree;
  {
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    std::vector<char> tree_edge(rs.instances.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (size_t e = 0; e < rs.instances.size(); ++e) {
        auto [a, b] = rs.instances[e];
        if (a != v && b != v) continue;
        int w = a == v ? b : a;
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          tree_edge[e] = 1;
          stack.push_back(w);
        }
      }
    }
    for (size_t e = 0; e < rs.instances.size(); ++e)
      if (!tree_edge[e]) cotree.push_back(static_cast<int>(e));
  }

  std::optional<GenusSearchResult> best;
  detail::permute_rotations(g, incident, rs, 0, chi_floor, best, cotree, deadline);
  if (!best) throw Error("min_euler_genus_bruteforce: empty search space");
  return *best;
}

/// Rotation file format: one line per vertex "v: e1 e2 ... ed" (edge ids in
/// cyclic order, assigned by input edge order), plus an optional line
/// "signs: e:-1,e:-1" for negative edges.
inline SignedRotationSystem parse_rotation_file(
    const MultiGraph& host, const std::vector<std::pair<int, int>>& instances,
    std::string_view text) {
  SignedRotationSystem rs;
  rs.host = host;
  rs.instances = instances;
  rs.rotation.assign(static_cast<size_t>(host.order()), {});
  rs.sign.assign(instances.size(), 1);
  std::vector<char> seen_vertex(static_cast<size_t>(host.order()), 0);

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error("rotation file: missing ':' in line '" + line + "'");
    std::string head = line.substr(0, colon);
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
    std::string rest = line.substr(colon + 1);
    if (head == "signs") {
      std::istringstream items(rest);
      std::string item;
      while (std::getline(items, item, ',')) {
        auto sep = item.find(':');
        if (sep == std::string::npos)
          throw Error("rotation file: malformed sign entry '" + item + "'");
        int e = std::stoi(item.substr(0, sep));
        int s = std::stoi(item.substr(sep + 1));
        if (e < 0 || e >= static_cast<int>(instances.size()))
          throw Error("rotation file: sign for unknown edge " + std::to_string(e));
        if (s != 1 && s != -1)
          throw Error("rotation file: signs must be +-1");
        rs.sign[static_cast<size_t>(e)] = s;
      }
      continue;
    }
    int v = std::stoi(head);
    if (v < 0 || v >= host.order())
      throw Error("rotation file: vertex " + std::to_string(v) + " out of range");
    if (seen_vertex[static_cast<size_t>(v)])
      throw Error("rotation file: duplicate rotation for vertex " + std::to_string(v));
    seen_vertex[static_cast<size_t>(v)] = 1;
    std::istringstream ids(rest);
    int e;
    while (ids >> e) rs.rotation[static_cast<size_t>(v)].push_back(e);
  }
  rs.validate();
  return rs;
}

}  // namespace spanwalk

#endif  // SPANWALK_SURFACES_HPP
