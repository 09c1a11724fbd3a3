/*
 * Copyright 2026 The ccdist Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ccdist_tools/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "ccdist/jt.hpp"
#include "ccdist/oracle.hpp"
#include "ccdist/robin.hpp"
#include "ccdist/siskin.hpp"
#include "ccdist_tools/report.hpp"

namespace ccdist::cli {

namespace {

const std::map<std::string, GraphFormat> kFormats{{"edgelist", GraphFormat::EdgeList}, {"ccfb", GraphFormat::Ccfb}};

struct Labeled {
  std::vector<RootValue> labels;
  RootFunction f = RootFunction::identity();
  std::vector<MachineStats> machines;
  unsigned id_width = 0;
};

Labeled run_engine(const Graph& graph, const RunOptions& o) {
  Labeled out;
  if (o.algo == "jt" || o.algo == "rfjt") {
    if (o.algo == "rfjt" && graph.vertex_count() > 0) out.f = RootFunction::robin(max_degree_vertex(graph));
    MachineClock clock;
    auto parents = jt::run_cc_shared_parents(graph, out.f, o.workers);
    MachineStats stats;
    stats.edges_processed = graph.edge_count();
    stats.bytes_sent_to.assign(1, 0);
    stats.bytes_received_from.assign(1, 0);
    // One machine: every phase ends together.
    for (const auto t : {Timestamp::T1, Timestamp::T2, Timestamp::T3, Timestamp::T4})
      record_timestamp(stats, t, clock);
    out.labels = parents.snapshot();
    out.machines.push_back(std::move(stats));
    return out;
  }
  ClusterConfig config;
  config.machines = o.machines;
  config.workers = o.workers;
  config.buffer_capacity = o.buffer_capacity;
  config.seed = o.seed;
  DistributedResult result;
  if (o.algo == "siskin") {
    result = run_siskin(graph, config);
  } else if (o.algo == "robin") {
    result = run_robin(graph, config);
  } else {
    throw DomainError("unknown algorithm '" + o.algo + "'");
  }
  out.labels = std::move(result.labels);
  out.f = result.root_function;
  out.machines = std::move(result.machines);
  out.id_width = result.id_width;
  return out;
}

GraphFormat format_for(const std::optional<GraphFormat>& given, const std::string& path) {
  return given ? *given : format_from_path(path);
}

int run_cli(CLI::App& app, const std::vector<std::string>& args, std::ostream& out) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  }
  return -1;
}

}  // namespace

std::uint64_t labels_hash(std::span<const std::uint64_t> labels) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto label : labels) {
    for (int i = 0; i < 8; ++i) {
      h ^= (label >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  }
  return h;
}

GraphFormat parse_format(const std::string& name) {
  const auto it = kFormats.find(name);
  if (it == kFormats.end()) throw DomainError("unknown graph format '" + name + "'");
  return it->second;
}

int cmd_run(const RunOptions& o, std::string& report_text) {
  const auto start = std::chrono::steady_clock::now();
  const auto graph = read_graph(o.graph, format_for(o.format, o.graph));
  auto result = run_engine(graph, o);
  const auto wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  RunReport report;
  report.algorithm = o.algo;
  report.graph_path = o.graph;
  report.n = graph.vertex_count();
  report.m = graph.edge_count();
  report.machines = (o.algo == "jt" || o.algo == "rfjt") ? 1 : o.machines;
  report.workers = o.workers;
  report.buffer_capacity = o.buffer_capacity;
  report.seed = o.seed;
  report.root_function = result.f.describe();
  report.id_width = result.id_width;
  const auto stats = component_stats(result.labels);
  report.component_count = stats.count;
  report.largest_component_size = stats.largest;
  report.labels_hash = labels_hash(result.labels);
  report.per_machine = std::move(result.machines);
  report.wall_time_seconds = wall;
  if (o.verify) {
    const auto oracle = bfs_components(graph);
    report.verified = partitions_equivalent(result.labels, oracle.labels) &&
                      check_canonical_labels(graph, result.labels, result.f);
  }
  report_text = to_json(report);
  return report.verified.value_or(true) ? kExitOk : kExitUnverified;
}

int cmd_gen(const GenOptions& o) {
  const auto edges = generate_graph(parse_graph_kind(o.kind), o.n, o.m, o.seed);
  write_graph(o.out, edges, format_for(o.format, o.out));
  return kExitOk;
}

int cmd_convert(const ConvertOptions& o) {
  const auto graph = read_graph(o.in, format_for(o.in_format, o.in));
  write_graph(o.out, flatten(graph), format_for(o.out_format, o.out));
  return kExitOk;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected components on a simulated cluster", "ccdist"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Label connected components with one engine");
  run_cmd->add_option("--algo", run.algo, "Engine")->check(CLI::IsMember({"jt", "rfjt", "siskin", "robin"}));
  run_cmd->add_option("--graph", run.graph, "Input graph")->required();
  run_cmd->add_option("--format", run.format, "edgelist or ccfb; defaults by extension")
      ->transform(CLI::CheckedTransformer(kFormats));
  run_cmd->add_option("--machines", run.machines, "Simulated machines")->check(CLI::PositiveNumber);
  run_cmd->add_option("--workers", run.workers, "Worker threads per machine")->check(CLI::PositiveNumber);
  run_cmd->add_option("--buffer-cap", run.buffer_capacity, "Records per message buffer")
      ->check(CLI::PositiveNumber);
  run_cmd->add_flag("--verify", run.verify, "Check the labels against a BFS oracle");
  run_cmd->add_option("--report", run.report, "Write the JSON report here ('-' for stdout)");
  run_cmd->add_option("--seed", run.seed, "Seed for randomized scheduling");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic graph");
  gen_cmd->add_option("--kind", gen.kind, "erdos_renyi, planted_giant, path, star or complete")->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--m", gen.m, "Target edge count");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--out", gen.out, "Output file")->required();
  gen_cmd->add_option("--format", gen.format, "edgelist or ccfb; defaults by extension")
      ->transform(CLI::CheckedTransformer(kFormats));

  ConvertOptions convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between edge-list and binary CSR");
  convert_cmd->add_option("--in", convert.in, "Input file")->required();
  convert_cmd->add_option("--out", convert.out, "Output file")->required();
  convert_cmd->add_option("--in-format", convert.in_format)->transform(CLI::CheckedTransformer(kFormats));
  convert_cmd->add_option("--out-format", convert.out_format)->transform(CLI::CheckedTransformer(kFormats));

  try {
    if (const auto code = run_cli(app, args, out); code >= 0) return code;
    if (*run_cmd) {
      std::string report;
      const auto code = cmd_run(run, report);
      if (run.report == "-") {
        out << report;
      } else if (!run.report.empty()) {
        std::ofstream file(run.report);
        if (!file || !(file << report)) throw Error("cannot write report to " + run.report);
      }
      if (code == kExitUnverified) err << "verification failed: labels disagree with the BFS oracle\n";
      return code;
    }
    if (*gen_cmd) return cmd_gen(gen);
    return cmd_convert(convert);
  } catch (const CLI::ParseError& e) {
    err << "ccdist: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "ccdist: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace ccdist::cli
