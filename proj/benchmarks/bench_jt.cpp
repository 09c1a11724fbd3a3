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

#include <benchmark/benchmark.h>

#include "ccdist/jt.hpp"
#include "ccdist/oracle.hpp"

namespace {

using namespace ccdist;

const Graph& giant() {
  static const Graph g = build_csr(generate_graph(GraphKind::PlantedGiant, 1 << 16, 1 << 19, 1));
  return g;
}

void BM_JtIdentity(benchmark::State& state) {
  const auto& g = giant();
  for (auto _ : state) benchmark::DoNotOptimize(jt::run_cc_shared(g, RootFunction::identity(), state.range(0)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_JtIdentity)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_JtRobin(benchmark::State& state) {
  const auto& g = giant();
  const auto f = RootFunction::robin(max_degree_vertex(g));
  for (auto _ : state) benchmark::DoNotOptimize(jt::run_cc_shared(g, f, state.range(0)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_JtRobin)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_BfsOracle(benchmark::State& state) {
  const auto& g = giant();
  for (auto _ : state) benchmark::DoNotOptimize(bfs_components(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_BfsOracle)->Unit(benchmark::kMillisecond);

}  // namespace
