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

#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "spanwalk/walks.hpp"
#include "support/enumerate.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace spanwalk;
namespace fx = spanwalk::fixtures;

TEST_CASE("bounded walk search on the named fixtures") {
  SECTION("C5 with unit caps is the Hamilton cycle") {
    auto cert = find_k_walk(fx::cycle(5), 1);
    REQUIRE(cert.has_value());
    cert->validate();
    for (int m : cert->usage()) CHECK(m == 1);
    CHECK(cert->max_visits() == 1);
  }
  SECTION("claw has no unit trail") {
    CHECK_FALSE(find_k_trail(fx::star(3), 1).has_value());
    CHECK_FALSE(min_trail_number(fx::star(3)).has_value());
  }
  SECTION("claw with caps 3 doubles every edge") {
    auto cert = find_k_walk(fx::star(3), 3);
    REQUIRE(cert.has_value());
    cert->validate();
    for (int m : cert->usage()) CHECK(m == 2);
    CHECK(cert->visits(0) == 3);
  }
  SECTION("caps must be positive") {
    CHECK_THROWS_AS(find_k_walk(fx::cycle(4), 0), Error);
  }
}

TEST_CASE("minimum walk and trail numbers of the named fixtures") {
  CHECK(min_walk_number(fx::complete(4)) == 1);
  CHECK(min_trail_number(fx::complete(4)) == 1);
  CHECK(min_walk_number(fx::petersen()) == 2);
  CHECK(min_trail_number(fx::complete_bipartite(3, 4)) == 2);
  CHECK(min_walk_number(fx::star(5)) == 5);
  CHECK(min_walk_number(MultiGraph(1)) == 1);
  // Walks may reuse an edge, so a single simple edge closes; a trail cannot.
  CHECK(min_walk_number(fx::path(2)) == 1);
  CHECK_FALSE(min_trail_number(fx::path(2)).has_value());
  MultiGraph dbl(2);
  dbl.add_edge(0, 1, 2);
  CHECK(min_trail_number(dbl) == 1);
}

TEST_CASE("herschel graph needs a 2-walk") {
  MultiGraph h = fx::herschel();
  CHECK(bipartite_visit_lower_bound(h) == 2);
  CHECK(min_walk_number(h) == 2);
}

TEST_CASE("certificates revalidate and traverse") {
  SECTION("C4 all-ones traversal") {
    MultiGraph c4 = fx::cycle(4);
    EulerianCertificate cert(c4, CertKind::trail, {1, 1, 1, 1});
    cert.validate();
    CHECK(certificate_to_traversal(cert) == std::vector<int>{0, 1, 2, 3, 0});
  }
  SECTION("doubled star traversal meets the hub three times") {
    MultiGraph star = fx::star(3);
    EulerianCertificate cert(star, CertKind::walk, {2, 2, 2});
    cert.validate();
    CHECK(certificate_to_traversal(cert) ==
          std::vector<int>{0, 1, 0, 2, 0, 3, 0});
    CHECK(cert.visits(0) == 3);
  }
  SECTION("traversal occurrence counts equal half degrees") {
    std::mt19937 rng(160);
    int done = 0;
    while (done < 150) {
      int n = 2 + static_cast<int>(rng() % 7);
      MultiGraph g = oracles::random_multigraph(rng, n, 0.5, 2);
      if (!g.connected()) continue;
      auto cert = find_k_walk(g, 1 + static_cast<int>(rng() % 3));
      if (!cert) {
        ++done;
        continue;
      }
      cert->validate();
      auto walk = certificate_to_traversal(*cert);
      REQUIRE(walk.front() == walk.back());
      std::map<int, int> occurrences;
      for (size_t i = 0; i + 1 < walk.size(); ++i) ++occurrences[walk[i]];
      for (int v = 0; v < n; ++v) CHECK(occurrences[v] == cert->visits(v));
      // Replaying the edge steps reproduces the usage vector exactly.
      std::map<std::pair<int, int>, int> seen;
      for (size_t i = 0; i + 1 < walk.size(); ++i)
        ++seen[{std::min(walk[i], walk[i + 1]), std::max(walk[i], walk[i + 1])}];
      for (size_t i = 0; i < g.pairs().size(); ++i)
        CHECK(seen[{g.pairs()[i].u, g.pairs()[i].v}] == cert->usage()[i]);
      ++done;
    }
  }
}

TEST_CASE("invalid certificates are rejected") {
  MultiGraph c4 = fx::cycle(4);
  CHECK_THROWS_AS(EulerianCertificate(c4, CertKind::trail, {2, 1, 1, 1}).validate(),
                  Error);  // trail over a simple edge
  CHECK_THROWS_AS(EulerianCertificate(c4, CertKind::walk, {1, 1, 1, 0}).validate(),
                  Error);  // odd degrees
  CHECK_THROWS_AS(EulerianCertificate(c4, CertKind::walk, {2, 2, 0, 0}).validate(),
                  Error);  // vertex 2 uncovered
  MultiGraph two_triangles(6);
  for (auto [u, v] : std::vector<std::pair<int, int>>{
           {0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})
    two_triangles.add_edge(u, v);
  CHECK_THROWS_AS(
      EulerianCertificate(two_triangles, CertKind::walk, {1, 1, 1, 1, 1, 1}).validate(),
      Error);  // disconnected support
}

TEST_CASE("oracle agrees with direct traversal enumeration up to 6 vertices") {
  for (const MultiGraph& g : enumerate::all_connected_up_to(6)) {
    CAPTURE(g.canonical_string());
    CHECK(min_walk_number(g) == oracles::traversal_min_walk(g));
    CHECK(min_trail_number(g) == oracles::traversal_min_trail(g));
  }
}

TEST_CASE("walk monotonicity: a k-walk implies a (k+1)-walk") {
  std::mt19937 rng(2024);
  int done = 0;
  while (done < 80) {
    int n = 2 + static_cast<int>(rng() % 6);
    MultiGraph g = oracles::random_connected_graph(rng, n, 0.5);
    int k = min_walk_number(g);
    auto cert = find_k_walk(g, k + 1);
    REQUIRE(cert.has_value());  // certificate reuse: caps only loosen
    ++done;
  }
}

TEST_CASE("bipartite visit lower bound") {
  CHECK(bipartite_visit_lower_bound(fx::complete_bipartite(4, 5)) == 2);
  CHECK(bipartite_visit_lower_bound(fx::complete_bipartite(4, 8)) == 2);
  CHECK(bipartite_visit_lower_bound(fx::complete_bipartite(3, 9)) == 3);
  CHECK(bipartite_visit_lower_bound(fx::complete(4)) == 1);  // odd cycle: no bound
  CHECK(bipartite_visit_lower_bound(fx::cycle(6)) == 1);
}

TEST_CASE("search honors deadlines") {
  // An impossible cap on a largish dense graph forces a full refutation
  // search; a zero deadline must abort it.
  MultiGraph g = fx::complete_bipartite(4, 8);
  CHECK_THROWS_AS(find_k_trail(g, 1, Deadline::after_ms(0)), TimeoutError);
}
