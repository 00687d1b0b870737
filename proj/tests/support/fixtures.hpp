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

#ifndef SPANWALK_TESTS_FIXTURES_HPP
#define SPANWALK_TESTS_FIXTURES_HPP

#include <vector>

#include "spanwalk/multigraph.hpp"

namespace spanwalk::fixtures {

inline MultiGraph complete(int n) {
  MultiGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline MultiGraph complete_bipartite(int a, int b) {
  MultiGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

inline MultiGraph cycle(int n) {
  MultiGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline MultiGraph path(int n) {
  MultiGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline MultiGraph star(int leaves) {
  MultiGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

/// Wheel on n vertices: hub 0 plus an (n-1)-cycle.
inline MultiGraph wheel(int n) {
  MultiGraph g(n);
  for (int i = 1; i < n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i == n - 1 ? 1 : i + 1);
  }
  return g;
}

/// Prism over a k-cycle (2k vertices).
inline MultiGraph prism(int k) {
  MultiGraph g(2 * k);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(k + i, k + (i + 1) % k);
    g.add_edge(i, k + i);
  }
  return g;
}

/// Antiprism over a k-cycle (2k vertices).
inline MultiGraph antiprism(int k) {
  MultiGraph g(2 * k);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(k + i, k + (i + 1) % k);
    g.add_edge(i, k + i);
    g.add_edge(i, k + (i + 1) % k);
  }
  return g;
}

/// Bipyramid: two apexes over a k-cycle (k+2 vertices).
inline MultiGraph bipyramid(int k) {
  MultiGraph g(k + 2);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(i, k);
    g.add_edge(i, k + 1);
  }
  return g;
}

inline MultiGraph petersen() {
  MultiGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);        // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);
  }
  return g;
}

inline MultiGraph icosahedron() {
  return MultiGraph::from_edges(
      12, {{0, 1}, {0, 5}, {0, 7},  {0, 8},  {0, 11}, {1, 2},  {1, 5},  {1, 6},
           {1, 8}, {2, 3}, {2, 6},  {2, 8},  {2, 9},  {3, 4},  {3, 6},  {3, 9},
           {3, 10}, {4, 5}, {4, 6}, {4, 10}, {4, 11}, {5, 6},  {5, 11}, {7, 8},
           {7, 9}, {7, 10}, {7, 11}, {8, 9}, {9, 10}, {10, 11}});
}

/// Smallest non-Hamiltonian 3-connected planar graph (11 vertices).
inline MultiGraph herschel() {
  return MultiGraph::from_edges(
      11, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {2, 6}, {2, 7},
           {3, 8}, {3, 9}, {4, 6}, {4, 8}, {5, 7}, {5, 9}, {6, 10}, {7, 10},
           {8, 10}, {9, 10}});
}

inline MultiGraph doubled(const MultiGraph& g) {
  MultiGraph out(g.order());
  for (const MultiGraph::Pair& p : g.pairs()) out.add_edge(p.u, p.v, 2 * p.mult);
  return out;
}

}  // namespace spanwalk::fixtures

#endif  // SPANWALK_TESTS_FIXTURES_HPP
