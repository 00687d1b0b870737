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

// Batch front end: read graphs, run one verification pipeline per graph,
// stream a machine-readable report. Exit 0 = all pass, 1 = any fail,
// 2 = usage or input error.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "spanwalk/connectivity.hpp"
#include "spanwalk/formats.hpp"
#include "spanwalk/hypotheses.hpp"
#include "spanwalk/json_io.hpp"
#include "spanwalk/lifting.hpp"
#include "spanwalk/surfaces.hpp"
#include "spanwalk/tree_connectivity.hpp"
#include "spanwalk/walks.hpp"

namespace {

using spanwalk::json;

struct Options {
  std::vector<std::string> inputs;
  std::string format;  // empty: by extension
  bool tsv = false;
  int max_k = 8;
  long long timeout_ms = 60000;
  int jobs = 1;
  bool timing = false;
  // per-command parameters
  int m = 2;
  int chi = 0;
  int k = 3;
  std::string rotation_file;
};

struct Record {
  std::string id;
  std::string command;
  json parameters = json::object();
  std::string outcome;  // pass | fail | skip
  std::string reason;   // set for skip and some fails
  json witness = json::object();
  long long wall_ms = 0;
  std::string detail;   // TSV column
};

struct Input {
  spanwalk::ParsedGraph parsed;
  std::string source;
};

std::vector<Input> load_inputs(const Options& opt) {
  std::vector<Input> out;
  for (const std::string& path : opt.inputs) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw spanwalk::Error("cannot read input file '" + path + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    std::string text = buf.str();
    spanwalk::GraphFormat fmt;
    if (opt.format == "graph6") fmt = spanwalk::GraphFormat::graph6;
    else if (opt.format == "sparse6") fmt = spanwalk::GraphFormat::sparse6;
    else if (opt.format == "edge-list") fmt = spanwalk::GraphFormat::edge_list;
    else if (opt.format.empty()) fmt = spanwalk::format_from_extension(path);
    else throw spanwalk::Error("unknown --format '" + opt.format + "'");
    if (fmt == spanwalk::GraphFormat::edge_list) {
      out.push_back({spanwalk::parse_edge_list(text), path});
    } else {
      // graph6/sparse6 corpus files carry one graph per line.
      std::istringstream lines(text);
      std::string line;
      int lineno = 0;
      while (std::getline(lines, line)) {
        ++lineno;
        if (line.empty()) continue;
        out.push_back({spanwalk::parse_graph(line, fmt),
                       path + ":" + std::to_string(lineno)});
      }
    }
  }
  return out;
}

json certificate_or_null(const std::optional<spanwalk::EulerianCertificate>& c) {
  return c ? spanwalk::to_json(*c) : json(nullptr);
}

// One graph, one record.
Record run_pipeline(const std::string& command, const Options& opt,
                    const spanwalk::ParsedGraph& input) {
  const spanwalk::MultiGraph& g = input.graph;
  Record rec;
  rec.id = spanwalk::hash_hex(g.hash64());
  rec.command = command;
  spanwalk::Deadline deadline = spanwalk::Deadline::after_ms(opt.timeout_ms);

  auto skip = [&](const std::string& reason) {
    rec.outcome = "skip";
    rec.reason = reason;
    rec.detail = reason;
  };

  try {
    if (command == "min-walk" || command == "min-trail") {
      rec.parameters = {{"max_k", opt.max_k}};
      std::optional<spanwalk::EulerianCertificate> cert;
      std::optional<int> min_k;
      int cap = opt.max_k;
      if (command == "min-trail") {
        int kmax = 1;
        for (int v = 0; v < g.order(); ++v) kmax = std::max(kmax, g.degree(v) / 2);
        cap = std::min(cap, kmax);
      }
      if (g.order() == 1) {
        min_k = 1;
        cert = spanwalk::EulerianCertificate(g, spanwalk::CertKind::walk, {});
      } else {
        for (int k = 1; k <= cap && !min_k; ++k) {
          cert = spanwalk::find_bounded_walk(
              g, std::vector<int>(static_cast<size_t>(g.order()), k),
              command == "min-walk" ? spanwalk::CertKind::walk
                                    : spanwalk::CertKind::trail,
              deadline);
          if (cert) min_k = k;
        }
      }
      if (!min_k && command == "min-walk" && opt.max_k < g.order()) {
        skip("max-k-exceeded");
        return rec;
      }
      rec.outcome = "pass";
      rec.witness = {{"min_k", min_k ? json(*min_k) : json(nullptr)},
                     {"certificate", certificate_or_null(cert)}};
      rec.detail = min_k ? "min_k=" + std::to_string(*min_k) : "min_k=none";
    } else if (command == "decompose") {
      rec.parameters = {{"m", opt.m}};
      spanwalk::TCPartition p = spanwalk::tree_connected_components(g, opt.m);
      rec.outcome = "pass";
      rec.witness = spanwalk::to_json(p);
      rec.detail = "parts=" + std::to_string(p.parts.size()) +
                   " omega=" + p.omega.str();
    } else if (command == "verify halin") {
      if (!spanwalk::is_minimally_3_connected(g)) {
        skip("not-minimally-3-connected");
        return rec;
      }
      spanwalk::HalinReport r = spanwalk::verify_halin_properties(g);
      rec.outcome = r.all_passed() ? "pass" : "fail";
      rec.witness = spanwalk::to_json(r);
      rec.detail = rec.outcome;
    } else if (command == "verify walk-theorem") {
      int k = spanwalk::walk_bound(opt.chi);
      rec.parameters = {{"chi", opt.chi}, {"k", k}};
      if (!spanwalk::is_3_connected(g)) {
        skip("not-3-connected");
        return rec;
      }
      spanwalk::VertexSet x;
      for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= k + 1) x.push_back(v);
      bool independent = true;
      for (size_t i = 0; i < x.size() && independent; ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
          if (g.has_edge(x[i], x[j])) {
            independent = false;
            break;
          }
      json hypothesis(nullptr);
      if (independent) {
        spanwalk::HypothesisReport hr =
            spanwalk::check_walk_hypothesis(g, x, k, true, deadline);
        hypothesis = spanwalk::to_json(hr);
      } else {
        rec.reason = "X-not-independent";
      }
      auto cert = spanwalk::find_k_walk(g, k, deadline);
      rec.outcome = cert ? "pass" : "fail";
      rec.witness = {{"hypothesis", hypothesis},
                     {"certificate", certificate_or_null(cert)}};
      rec.detail = "k=" + std::to_string(k) + " " + rec.outcome;
    } else if (command == "verify trail-theorem") {
      int k = spanwalk::trail_bound(opt.chi);
      rec.parameters = {{"chi", opt.chi}, {"k", k}};
      if (!spanwalk::is_k_connected(g, 5)) {
        skip("not-5-connected");
        return rec;
      }
      spanwalk::HypothesisReport hr = spanwalk::check_trail_hypothesis(g, k, deadline);
      auto cert = spanwalk::find_k_trail(g, k, deadline);
      rec.outcome = cert ? "pass" : "fail";
      rec.witness = {{"hypothesis", spanwalk::to_json(hr)},
                     {"certificate", certificate_or_null(cert)}};
      rec.detail = "k=" + std::to_string(k) + " " + rec.outcome;
    } else if (command == "reduce") {
      rec.parameters = {{"k", opt.k}};
      if (!spanwalk::is_3_connected(g)) {
        skip("not-3-connected");
        return rec;
      }
      spanwalk::ReduceOutcome out = spanwalk::reduce_to_bipartite_witness(g, opt.k, deadline);
      if (out.certificate) {
        rec.outcome = "pass";
        rec.witness = {{"certificate", spanwalk::to_json(*out.certificate)},
                       {"trace", spanwalk::to_json(out.trace)}};
        rec.detail = "certificate steps=" + std::to_string(out.trace.steps.size());
      } else {
        rec.outcome = "fail";
        rec.witness = {{"witness", spanwalk::to_json(*out.witness)}};
        rec.detail = "bipartite-witness";
      }
    } else if (command == "embed chi") {
      std::ifstream rot(opt.rotation_file);
      if (!rot)
        throw spanwalk::Error("cannot read rotation file '" + opt.rotation_file + "'");
      std::stringstream buf;
      buf << rot.rdbuf();
      spanwalk::SignedRotationSystem rs =
          spanwalk::parse_rotation_file(g, input.input_edge_order, buf.str());
      spanwalk::EmbeddingReport r = spanwalk::face_trace(rs);
      rec.outcome = "pass";
      rec.witness = spanwalk::to_json(r);
      rec.detail = "chi=" + std::to_string(r.chi) + " F=" + std::to_string(r.face_count);
    } else {
      throw spanwalk::Error("unknown command '" + command + "'");
    }
  } catch (const spanwalk::TimeoutError&) {
    skip("timeout");
  }
  return rec;
}

Record run_lower_bound(const Options& opt) {
  int b = -opt.chi + 4;
  if (b < 1) throw spanwalk::Error("lower-bound: chi too large, K_{4,b} needs b >= 1");
  spanwalk::MultiGraph g(4 + b);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, 4 + j);
  Record rec;
  rec.id = spanwalk::hash_hex(g.hash64());
  rec.command = "lower-bound";
  int expected = spanwalk::conjecture_lower_bound(opt.chi);
  rec.parameters = {{"chi", opt.chi}, {"b", b}, {"bound", expected}};
  spanwalk::Deadline deadline = spanwalk::Deadline::after_ms(opt.timeout_ms);
  try {
    std::optional<int> mt;
    for (int k = 1; k <= opt.max_k && !mt; ++k)
      if (spanwalk::find_k_trail(g, k, deadline)) mt = k;
    if (!mt) {
      rec.outcome = "skip";
      rec.reason = "max-k-exceeded";
      rec.detail = rec.reason;
      return rec;
    }
    rec.outcome = *mt >= expected ? "pass" : "fail";
    rec.witness = {{"min_trail", *mt}, {"bound", expected}};
    rec.detail = "min_trail=" + std::to_string(*mt) +
                 " bound=" + std::to_string(expected);
  } catch (const spanwalk::TimeoutError&) {
    // The counting certificate still settles the bound when it applies.
    int counting = spanwalk::bipartite_visit_lower_bound(g);
    if (counting >= expected) {
      rec.outcome = "pass";
      rec.reason = "counting-certificate";
      rec.witness = {{"counting_lower_bound", counting}, {"bound", expected}};
      rec.detail = "counting=" + std::to_string(counting);
    } else {
      rec.outcome = "skip";
      rec.reason = "timeout";
      rec.detail = "timeout";
    }
  }
  return rec;
}

int emit_and_exit(std::vector<Record>& records, const Options& opt) {
  int pass = 0, fail = 0, skipped = 0;
  for (const Record& r : records) {
    if (r.outcome == "pass") ++pass;
    else if (r.outcome == "fail") ++fail;
    else ++skipped;
  }
  if (opt.tsv) {
    for (const Record& r : records)
      std::cout << r.id << "\t" << r.command << "\t" << r.outcome << "\t"
                << r.detail << "\n";
  } else {
    json doc;
    doc["records"] = json::array();
    for (const Record& r : records) {
      json jr = {{"id", r.id},
                 {"command", r.command},
                 {"parameters", r.parameters},
                 {"outcome", r.outcome},
                 {"witness", r.witness},
                 {"wall_time_ms", opt.timing ? r.wall_ms : 0}};
      if (!r.reason.empty()) jr["reason"] = r.reason;
      doc["records"].push_back(jr);
    }
    doc["summary"] = {{"pass", pass}, {"fail", fail}, {"skip", skipped}};
    std::cout << doc.dump(2) << "\n";
  }
  return fail > 0 ? 1 : 0;
}

int run_batch(const std::string& command, const Options& opt) {
  std::vector<Input> inputs = load_inputs(opt);
  // Exhaustive subcommands refuse oversize graphs outright.
  for (const Input& in : inputs) {
    int n = in.parsed.graph.order();
    if (command == "decompose" && n > 20)
      throw spanwalk::Error(in.source + ": graph too large for decompose (n <= 20)");
    if (command == "verify walk-theorem" && n > 20)
      throw spanwalk::Error(in.source + ": graph too large for walk-theorem (n <= 20)");
    if (command == "verify trail-theorem" && n > 14)
      throw spanwalk::Error(in.source + ": graph too large for trail-theorem (n <= 14)");
  }
  std::vector<Record> records(inputs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= inputs.size()) break;
      auto t0 = std::chrono::steady_clock::now();
      records[i] = run_pipeline(command, opt, inputs[i].parsed);
      records[i].wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
    }
  };
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return emit_and_exit(records, opt);
}

void add_common_flags(CLI::App* cmd, Options& opt, bool needs_input) {
  auto* in = cmd->add_option("--input", opt.inputs, "input graph file (repeatable)");
  if (needs_input) in->required();
  cmd->add_option("--format", opt.format, "graph6|sparse6|edge-list (default: by extension)");
  cmd->add_flag("--json", "JSON output (default)");
  cmd->add_flag("--tsv", opt.tsv, "TSV output");
  cmd->add_option("--max-k", opt.max_k, "oracle cap")->capture_default_str();
  cmd->add_option("--timeout-ms", opt.timeout_ms, "per-graph timeout")->capture_default_str();
  cmd->add_option("--jobs", opt.jobs, "parallel graphs")->capture_default_str();
  cmd->add_flag("--timing", opt.timing, "report real wall times");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spanning walk/trail toolkit"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* min_walk = app.add_subcommand("min-walk", "minimum k with a k-walk");
  add_common_flags(min_walk, opt, true);
  CLI::App* min_trail = app.add_subcommand("min-trail", "minimum k with a k-trail");
  add_common_flags(min_trail, opt, true);

  CLI::App* decompose = app.add_subcommand("decompose", "m-tree-connected components");
  decompose->add_option("--m", opt.m, "tree count")->capture_default_str();
  add_common_flags(decompose, opt, true);

  CLI::App* verify = app.add_subcommand("verify", "theorem-level pipelines");
  verify->require_subcommand(1);
  CLI::App* halin = verify->add_subcommand("halin", "minimally 3-connected properties");
  add_common_flags(halin, opt, true);
  CLI::App* walk_thm = verify->add_subcommand("walk-theorem", "3-connected surface walk pipeline");
  walk_thm->add_option("--chi", opt.chi, "Euler characteristic")->required();
  add_common_flags(walk_thm, opt, true);
  CLI::App* trail_thm = verify->add_subcommand("trail-theorem", "5-connected surface trail pipeline");
  trail_thm->add_option("--chi", opt.chi, "Euler characteristic")->required();
  add_common_flags(trail_thm, opt, true);

  CLI::App* reduce = app.add_subcommand("reduce", "walk certificate or bipartite witness");
  reduce->add_option("--k", opt.k, "walk bound (k >= 3)")->required();
  add_common_flags(reduce, opt, true);

  CLI::App* embed = app.add_subcommand("embed", "embedding reports");
  embed->require_subcommand(1);
  CLI::App* embed_chi = embed->add_subcommand("chi", "Euler characteristic of a rotation");
  embed_chi->add_option("--rotation", opt.rotation_file, "rotation file")->required();
  add_common_flags(embed_chi, opt, true);

  CLI::App* lower = app.add_subcommand("lower-bound", "trail lower bound on K_{4,-chi+4}");
  lower->add_option("--chi", opt.chi, "Euler characteristic")->required();
  add_common_flags(lower, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (min_walk->parsed()) return run_batch("min-walk", opt);
    if (min_trail->parsed()) return run_batch("min-trail", opt);
    if (decompose->parsed()) return run_batch("decompose", opt);
    if (verify->parsed()) {
      if (halin->parsed()) return run_batch("verify halin", opt);
      if (walk_thm->parsed()) return run_batch("verify walk-theorem", opt);
      if (trail_thm->parsed()) return run_batch("verify trail-theorem", opt);
    }
    if (reduce->parsed()) {
      if (opt.k < 3) throw spanwalk::Error("reduce requires --k >= 3");
      return run_batch("reduce", opt);
    }
    if (embed->parsed() && embed_chi->parsed()) return run_batch("embed chi", opt);
    if (lower->parsed()) {
      if (opt.chi > 0) throw spanwalk::Error("lower-bound requires --chi <= 0");
      std::vector<Record> records{run_lower_bound(opt)};
      return emit_and_exit(records, opt);
    }
    throw spanwalk::Error("no subcommand selected");
  } catch (const spanwalk::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const spanwalk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
