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

#include "ccdist/robin.hpp"
#include "ccdist/siskin.hpp"

namespace {

using namespace ccdist;

const Graph& giant() {
  static const Graph g = build_csr(generate_graph(GraphKind::PlantedGiant, 1 << 15, 1 << 18, 2));
  return g;
}

template <DistributedResult (*Run)(const Graph&, const ClusterConfig&)>
void BM_Distributed(benchmark::State& state) {
  const auto& g = giant();
  ClusterConfig c;
  c.machines = static_cast<Rank>(state.range(0));
  c.workers = 1;
  c.buffer_capacity = 4096;
  std::uint64_t bytes = 0;
  for (auto _ : state) {
    const auto r = Run(g, c);
    bytes = r.total_bytes_sent();
    benchmark::DoNotOptimize(r.labels.data());
  }
  state.counters["wire_bytes"] = static_cast<double>(bytes);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}

BENCHMARK(BM_Distributed<&run_siskin>)->Name("BM_Siskin")->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Distributed<&run_robin>)->Name("BM_Robin")->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()
    ->Unit(benchmark::kMillisecond);

}  // namespace
