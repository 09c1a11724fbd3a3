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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ccdist/graph_io.hpp"
#include "ccdist_tools/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace ccdist;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Invocation r;
  r.code = cli::main_entry(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "ccdist_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

nlohmann::json run_report(const std::vector<std::string>& extra, int expected_code = cli::kExitOk) {
  std::vector<std::string> args{"run", "--report", "-"};
  args.insert(args.end(), extra.begin(), extra.end());
  const auto r = invoke(args);
  REQUIRE_MESSAGE(r.code == expected_code, r.err);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("robin on a four-vertex path") {
  const auto path = scratch("path4.txt");
  REQUIRE(invoke({"gen", "--kind", "path", "--n", "4", "--out", path.string()}).code == 0);
  const auto report = run_report({"--algo", "robin", "--machines", "1", "--verify", "--graph", path.string()});
  CHECK(report["verified"] == true);
  CHECK(report["component_count"] == 1);
  CHECK(report["graph"]["n"] == 4);
  CHECK(report["graph"]["m"] == 3);
}

TEST_CASE("siskin on planted_giant stays within the pair bound") {
  const auto path = scratch("giant1000.ccfb");
  REQUIRE(invoke({"gen", "--kind", "planted_giant", "--n", "1000", "--m", "3000", "--seed", "1", "--out",
                  path.string()})
              .code == 0);
  const auto report = run_report(
      {"--algo", "siskin", "--machines", "4", "--workers", "2", "--verify", "--graph", path.string()});
  CHECK(report["verified"] == true);
  std::uint64_t pairs = 0;
  for (const auto& m : report["per_machine"]) pairs += m["traffic"]["parent_pair"]["records_sent"].get<std::uint64_t>();
  CHECK(pairs > 0);
  CHECK(pairs <= std::min<std::uint64_t>(report["graph"]["m"].get<std::uint64_t>(), 3 * 1000));
  std::uint64_t sent = 0;
  std::uint64_t received = 0;
  for (const auto& m : report["per_machine"]) {
    sent += m["bytes_sent"].get<std::uint64_t>();
    received += m["bytes_received"].get<std::uint64_t>();
  }
  CHECK(sent == received);
  CHECK(report["totals"]["bytes_sent"] == sent);
}

TEST_CASE("jt on an empty graph") {
  const auto path = scratch("empty.txt");
  std::ofstream(path) << "";
  const auto report = run_report({"--algo", "jt", "--graph", path.string(), "--verify"});
  CHECK(report["component_count"] == 0);
  CHECK(report["verified"] == true);
}

TEST_CASE("same flags give the same labels hash") {
  const auto path = scratch("er.txt");
  REQUIRE(invoke({"gen", "--kind", "erdos_renyi", "--n", "300", "--m", "400", "--seed", "5", "--out", path.string()})
              .code == 0);
  for (const std::string algo : {"jt", "rfjt", "siskin", "robin"}) {
    const std::vector<std::string> flags{"--algo", algo, "--machines", "3", "--workers", "2",
                                         "--seed", "9",  "--graph", path.string()};
    const auto a = run_report(flags);
    const auto b = run_report(flags);
    CHECK(a["labels_hash"] == b["labels_hash"]);
    CHECK(a["component_count"] == b["component_count"]);
    CHECK(a["largest_component_size"] == b["largest_component_size"]);
    CHECK(a["verified"].is_null());
  }
  const auto jt = run_report({"--algo", "jt", "--graph", path.string()});
  const auto siskin = run_report({"--algo", "siskin", "--machines", "4", "--graph", path.string()});
  CHECK(jt["labels_hash"] == siskin["labels_hash"]);
}

TEST_CASE("report written to a file") {
  const auto path = scratch("star.txt");
  const auto report = scratch("report.json");
  REQUIRE(invoke({"gen", "--kind", "star", "--n", "6", "--out", path.string()}).code == 0);
  const auto r = invoke({"run", "--algo", "rfjt", "--graph", path.string(), "--report", report.string()});
  CHECK(r.code == 0);
  std::ifstream in(report);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["algorithm"] == "rfjt");
  CHECK(doc["root_function"] == "robin(hub=0)");
}

TEST_CASE("gen round trips through both formats") {
  for (const std::string kind : {"path", "star", "planted_giant"}) {
    const auto txt = scratch(kind + ".txt");
    const auto bin = scratch(kind + ".ccfb");
    const std::string m = kind == "planted_giant" ? "300" : "0";
    REQUIRE(invoke({"gen", "--kind", kind, "--n", "100", "--m", m, "--seed", "3", "--out", txt.string()}).code == 0);
    REQUIRE(invoke({"gen", "--kind", kind, "--n", "100", "--m", m, "--seed", "3", "--out", bin.string()}).code == 0);
    CHECK(read_graph(txt, GraphFormat::EdgeList) == read_graph(bin, GraphFormat::Ccfb));
  }
  CHECK(invoke({"gen", "--kind", "complete", "--n", "5", "--m", "3", "--out", scratch("x.txt").string()}).code ==
        cli::kExitError);
}

TEST_CASE("convert round trip keeps the header and sorts neighbors") {
  const auto txt = scratch("conv.txt");
  const auto bin = scratch("conv.ccfb");
  const auto back = scratch("conv_back.txt");
  std::ofstream(txt) << "# n 9\n3 1\n0 2\n3 0\n";
  REQUIRE(invoke({"convert", "--in", txt.string(), "--out", bin.string()}).code == 0);
  REQUIRE(invoke({"convert", "--in", bin.string(), "--out", back.string()}).code == 0);
  const auto el = load_edge_list(std::string(std::istreambuf_iterator<char>(std::ifstream(back).rdbuf()), {}));
  CHECK(el.n == 9);
  CHECK(el.edges == std::vector<Edge>{{0, 2}, {3, 0}, {3, 1}});
}

TEST_CASE("convert rejects a truncated ccfb") {
  const auto txt = scratch("t.txt");
  const auto bin = scratch("t.ccfb");
  std::ofstream(txt) << "0 1\n1 2\n";
  REQUIRE(invoke({"convert", "--in", txt.string(), "--out", bin.string()}).code == 0);
  fs::resize_file(bin, fs::file_size(bin) - 3);
  const auto r = invoke({"convert", "--in", bin.string(), "--out", scratch("t2.txt").string()});
  CHECK(r.code == cli::kExitError);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("operational errors exit with 1") {
  CHECK(invoke({"run", "--graph", "/nonexistent/graph.txt"}).code == cli::kExitError);
  CHECK(invoke({"run", "--graph", "x", "--bogus"}).code == cli::kExitError);
  CHECK(invoke({"run", "--algo", "fastsv", "--graph", "x"}).code == cli::kExitError);
  CHECK(invoke({"run", "--graph", "x", "--machines", "0"}).code == cli::kExitError);
  CHECK(invoke({}).code == cli::kExitError);
  const auto bad = scratch("bad.txt");
  std::ofstream(bad) << "0 1\n1 q\n";
  const auto r = invoke({"run", "--graph", bad.string()});
  CHECK(r.code == cli::kExitError);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("run") != std::string::npos);
}

TEST_CASE("labels hash is FNV-1a over little-endian labels") {
  CHECK(cli::labels_hash(std::vector<std::uint64_t>{}) == 0xcbf29ce484222325ull);
  CHECK(cli::labels_hash(std::vector<std::uint64_t>{0}) != cli::labels_hash(std::vector<std::uint64_t>{1}));
  CHECK(cli::labels_hash(std::vector<std::uint64_t>{1, 0}) != cli::labels_hash(std::vector<std::uint64_t>{0, 1}));
}
