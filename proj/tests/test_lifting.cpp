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

#include <random>

#include "spanwalk/connectivity.hpp"
#include "spanwalk/lifting.hpp"
#include "support/enumerate.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace spanwalk;
namespace fx = spanwalk::fixtures;

TEST_CASE("lifting the triangle walk over a contracted C4 edge") {
  MultiGraph c4 = fx::cycle(4);
  Contraction ct = contract_edge_traced(c4, 0, 1);
  auto tri = find_k_walk(ct.graph, 1);
  REQUIRE(tri.has_value());
  EulerianCertificate lifted = lift_walk_over_edge(c4, 0, 1, *tri);
  lifted.validate();
  // Both endpoint parities are odd: a single copy of {0,1} closes the
  // Hamilton cycle of C4.
  CHECK(lifted.usage_of(0, 1) == 1);
  CHECK(lifted.max_visits() == 1);
}

TEST_CASE("lifting over any K4 edge stays within the degree bump") {
  MultiGraph k4 = fx::complete(4);
  for (const MultiGraph::Pair& p : k4.pairs()) {
    Contraction ct = contract_edge_traced(k4, p.u, p.v);
    auto base = find_k_walk(ct.graph, 2);
    REQUIRE(base.has_value());
    EulerianCertificate lifted = lift_walk_over_edge(k4, p.u, p.v, *base);
    lifted.validate();
    int before = 0, after = 0;
    for (int v = 0; v < ct.graph.order(); ++v)
      before = std::max(before, base->deg_mult(v));
    for (int v = 0; v < 4; ++v) after = std::max(after, lifted.deg_mult(v));
    CHECK(after <= before + 2);
  }
}

TEST_CASE("lift covers an endpoint the contracted walk avoided") {
  // z=0, a=1, b=2, y=3; the certificate on G/{0,3} avoids every pair that
  // pulls back to an edge at 3, so the lift must add two copies of {0,3}.
  MultiGraph g = MultiGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  Contraction ct = contract_edge_traced(g, 0, 3);
  REQUIRE(ct.graph.order() == 3);
  // Hamilton triangle on the contraction: usage one on every distinct pair.
  EulerianCertificate tri(ct.graph, CertKind::walk,
                          std::vector<int>(ct.graph.pairs().size(), 1));
  tri.validate();
  EulerianCertificate lifted = lift_walk_over_edge(g, 0, 3, tri);
  lifted.validate();
  CHECK(lifted.usage_of(0, 3) == 2);
  CHECK(lifted.visits(3) == 1);
}

TEST_CASE("randomized lift round-trips revalidate") {
  std::mt19937 rng(987123);
  int done = 0;
  while (done < 500) {
    int n = 4 + static_cast<int>(rng() % 6);
    MultiGraph g = oracles::random_connected_graph(rng, n, 0.55);
    if (!is_3_connected(g)) continue;
    std::vector<std::pair<int, int>> contractible;
    for (const MultiGraph::Pair& p : g.pairs())
      if (is_contractible_edge(g, p.u, p.v)) contractible.push_back({p.u, p.v});
    if (contractible.empty()) continue;
    auto [u, v] = contractible[rng() % contractible.size()];
    Contraction ct = contract_edge_traced(g, u, v);
    int k = min_walk_number(ct.graph);
    auto base = find_k_walk(ct.graph, k);
    REQUIRE(base.has_value());
    EulerianCertificate lifted = lift_walk_over_edge(g, u, v, *base);
    CAPTURE(g.canonical_string(), u, v);
    REQUIRE(lifted.is_valid());
    int before = 0, after = 0;
    for (int w = 0; w < ct.graph.order(); ++w)
      before = std::max(before, base->deg_mult(w));
    for (int w = 0; w < n; ++w) after = std::max(after, lifted.deg_mult(w));
    REQUIRE(after <= before + 2);
    ++done;
  }
}

TEST_CASE("path lift degenerate cases") {
  SECTION("single-vertex path is the identity") {
    MultiGraph k4 = fx::complete(4);
    auto cert = find_k_walk(k4, 2);
    REQUIRE(cert.has_value());
    EulerianCertificate same = lift_walk_over_path(k4, {2}, *cert, 2);
    CHECK(same.usage() == cert->usage());
  }
  SECTION("one-edge path matches the edge lift") {
    // Two adjacent degree-4 rim vertices of an augmented wheel; a Hamilton
    // certificate of the contraction keeps the repair in the common case.
    MultiGraph g = fx::wheel(6);
    g.add_edge(1, 3);
    g.add_edge(2, 4);
    REQUIRE(g.degree(1) == 4);
    REQUIRE(g.degree(2) == 4);
    std::vector<int> path{1, 2};
    Contraction ct = contract_vertex_set_traced(g, make_vertex_set(path));
    auto base = find_k_walk(ct.graph, 1);
    REQUIRE(base.has_value());
    EulerianCertificate via_path = lift_walk_over_path(g, path, *base, 3);
    EulerianCertificate via_edge = lift_walk_over_edge(g, 1, 2, *base);
    via_path.validate();
    via_edge.validate();
    CHECK(via_path.usage() == via_edge.usage());
  }
  SECTION("non-induced paths are rejected") {
    MultiGraph k4 = fx::complete(4);
    EulerianCertificate fake(MultiGraph(2), CertKind::walk, {});
    CHECK_THROWS_WITH(lift_walk_over_path(k4, {0, 1, 2}, fake, 3),
                      Catch::Matchers::ContainsSubstring("not induced"));
  }
  SECTION("missing off-path neighbor is reported by vertex") {
    MultiGraph p4 = fx::path(4);
    EulerianCertificate fake(MultiGraph(2), CertKind::walk, {});
    CHECK_THROWS_WITH(lift_walk_over_path(p4, {0, 1, 2}, fake, 3),
                      Catch::Matchers::ContainsSubstring("no neighbor off"));
  }
}

TEST_CASE("path lift over a two-edge path of degree-4 vertices") {
  // Six-vertex fixture: induced path 1-2-3, every vertex degree 4, both
  // path ends with neighbors off the path.
  MultiGraph g6(6);
  // Hand-built: path 1-2-3 all degree 4, ends have off-path neighbors.
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2},
                                                      {2, 3},
                                                      {0, 1},
                                                      {0, 2},
                                                      {0, 3},
                                                      {4, 1},
                                                      {4, 2},
                                                      {4, 3},
                                                      {0, 5},
                                                      {4, 5},
                                                      {1, 5},
                                                      {3, 5}})
    g6.add_edge(a, b);
  REQUIRE(g6.degree(1) == 4);
  REQUIRE(g6.degree(2) == 4);
  REQUIRE(g6.degree(3) == 4);
  REQUIRE(!g6.has_edge(1, 3));
  REQUIRE(is_3_connected(g6));
  std::vector<int> p123{1, 2, 3};
  Contraction ct = contract_vertex_set_traced(g6, make_vertex_set(p123));
  int k = 3;
  auto base = find_k_walk(ct.graph, k);
  REQUIRE(base.has_value());
  EulerianCertificate lifted = lift_walk_over_path(g6, p123, *base, k);
  lifted.validate();
  CHECK(lifted.max_visits() <= k);
  // Eulerian invariant: all degrees even.
  for (int v = 0; v < 6; ++v) CHECK(lifted.deg_mult(v) % 2 == 0);
}

TEST_CASE("reduction on K4 yields the Hamilton certificate") {
  ReduceOutcome out = reduce_to_bipartite_witness(fx::complete(4), 3);
  REQUIRE(out.certificate.has_value());
  CHECK_FALSE(out.witness.has_value());
  out.certificate->validate();
  CHECK(out.certificate->max_visits() <= 3);
}

TEST_CASE("reduction on Petersen produces a traced certificate") {
  ReduceOutcome out = reduce_to_bipartite_witness(fx::petersen(), 3);
  REQUIRE(out.certificate.has_value());
  out.certificate->validate();
  CHECK(out.certificate->max_visits() <= 3);
  CHECK_FALSE(out.trace.steps.empty());
  // The trace replays from the input to some intermediate graph.
  MultiGraph end = replay_trace(fx::petersen(), out.trace);
  CHECK(end.order() <= 10);
}

TEST_CASE("reduction rejects bad arguments") {
  CHECK_THROWS_AS(reduce_to_bipartite_witness(fx::complete(4), 2), Error);
  CHECK_THROWS_AS(reduce_to_bipartite_witness(fx::cycle(5), 3), Error);
}

TEST_CASE("witness branch via an injected failing oracle") {
  // K_{3,4} plus a parallel edge: the reduction first deletes the copy
  // (non-empty trace), finds no pattern to contract, and the stubbed
  // search failure turns the graph itself into the witness.
  MultiGraph g = fx::complete_bipartite(3, 4);
  g.add_edge(0, 3);
  detail::WalkOracle failing = [](const MultiGraph&, int) {
    return std::optional<EulerianCertificate>{};
  };
  ReduceOutcome out = detail::reduce_with_oracle(g, 3, failing);
  REQUIRE(out.witness.has_value());
  CHECK_FALSE(out.certificate.has_value());
  const BipartiteWitness& w = *out.witness;
  CHECK(w.R == fx::complete_bipartite(3, 4));
  CHECK(w.X == VertexSet{0, 1, 2});        // degree 4 = k+1 side
  CHECK(w.Y == VertexSet{3, 4, 5, 6});     // degree 3 side
  CHECK(is_3_connected(w.R));
  REQUIRE_FALSE(w.trace.steps.empty());
  CHECK(replay_trace(g, w.trace) == w.R);
  // Degree conditions hold exactly.
  for (int v : w.X) CHECK(w.R.degree(v) >= 4);
  for (int v : w.Y) CHECK(w.R.degree(v) == 3);
}

TEST_CASE("reduction certifies every small 3-connected graph") {
  // The acceptance suite runs the full n <= 12 sweep; here a spot sample.
  std::mt19937 rng(777);
  int done = 0;
  while (done < 40) {
    int n = 4 + static_cast<int>(rng() % 4);
    MultiGraph g = oracles::random_connected_graph(rng, n, 0.6);
    if (!is_3_connected(g)) continue;
    ReduceOutcome out = reduce_to_bipartite_witness(g, 3);
    CAPTURE(g.canonical_string());
    REQUIRE(out.certificate.has_value());
    REQUIRE(out.certificate->is_valid());
    REQUIRE(out.certificate->max_visits() <= 3);
    ++done;
  }
}
