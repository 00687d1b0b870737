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

#ifndef SPANWALK_JSON_IO_HPP
#define SPANWALK_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "spanwalk/connectivity.hpp"
#include "spanwalk/hypotheses.hpp"
#include "spanwalk/lifting.hpp"
#include "spanwalk/multigraph.hpp"
#include "spanwalk/surfaces.hpp"
#include "spanwalk/tree_connectivity.hpp"
#include "spanwalk/walks.hpp"

namespace spanwalk {

using json = nlohmann::json;

inline std::string hash_hex(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline json to_json(const MultiGraph& g) {
  json edges = json::array();
  for (const MultiGraph::Pair& p : g.pairs())
    edges.push_back({p.u, p.v, p.mult});
  return {{"n", g.order()}, {"edges", edges}};
}

inline json to_json(const EulerianCertificate& c) {
  json mult = json::array();
  for (size_t i = 0; i < c.host().pairs().size(); ++i)
    if (c.usage()[i] > 0)
      mult.push_back({c.host().pairs()[i].u, c.host().pairs()[i].v, c.usage()[i]});
  return {{"kind", c.kind() == CertKind::walk ? "walk" : "trail"},
          {"mult", mult},
          {"visits", c.all_visits()}};
}

inline json to_json(const HalinReport& r) {
  json checks = json::array();
  for (const HalinCheck& c : r.checks) {
    const char* status = c.status == HalinCheck::Status::pass   ? "pass"
                         : c.status == HalinCheck::Status::fail ? "fail"
                                                                : "skip";
    checks.push_back({{"property", c.property},
                      {"status", status},
                      {"witness", c.witness}});
  }
  return {{"graph", hash_hex(r.graph_id)}, {"checks", checks}};
}

inline json to_json(const TCPartition& p) {
  json parts = json::array();
  for (const VertexSet& part : p.parts) parts.push_back(part);
  return {{"m", p.m},
          {"parts", parts},
          {"crossing", p.crossing},
          {"omega", p.omega.str()}};
}

inline json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const ReductionStep& s : t.steps) {
    json step;
    switch (s.op) {
      case ReductionStep::Op::delete_edge:
        step["op"] = "delete-edge";
        step["edge"] = {s.edge.first, s.edge.second};
        break;
      case ReductionStep::Op::contract_edge:
        step["op"] = "contract-edge";
        step["edge"] = {s.edge.first, s.edge.second};
        break;
      case ReductionStep::Op::contract_path:
        step["op"] = "contract-path";
        step["path"] = s.path;
        break;
    }
    step["before"] = hash_hex(s.hash_before);
    step["after"] = hash_hex(s.hash_after);
    steps.push_back(step);
  }
  return steps;
}

inline json to_json(const BipartiteWitness& w) {
  return {{"R", to_json(w.R)},
          {"X", w.X},
          {"Y", w.Y},
          {"trace", to_json(w.trace)}};
}

inline json to_json(const HypothesisReport& r) {
  json out = {{"lemma", r.lemma},
              {"k", r.k},
              {"worst_s", r.worst_subset},
              {"left", r.left.str()},
              {"right", r.right.str()},
              {"satisfied", r.satisfied}};
  if (r.fallback) out["fallback_certificate"] = to_json(*r.fallback);
  return out;
}

inline json to_json(const EmbeddingReport& r) {
  return {{"chi", r.chi},
          {"F", r.face_count},
          {"orientable", r.orientable},
          {"faces", r.faces}};
}

}  // namespace spanwalk

#endif  // SPANWALK_JSON_IO_HPP
