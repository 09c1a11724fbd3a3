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

#include "ccdist/robin.hpp"

#include <optional>
#include <utility>

#include "runtime.hpp"

namespace ccdist {

RootValue robin_root(VertexId v, VertexId maxdeg) noexcept { return RootFunction::robin(maxdeg).forward(v); }

VertexId robin_root_inv(RootValue c, VertexId maxdeg) {
  if (c != 0 && c - 1 == maxdeg)
    throw ProtocolError("root value " + std::to_string(c) + " is not produced by any vertex");
  return RootFunction::robin(maxdeg).inverse(c);
}

VertexId global_max_degree(const Graph& graph, const PartitionMap& pm) {
  if (graph.vertex_count() == 0) throw DomainError("max degree of an empty graph");
  std::optional<std::pair<std::size_t, VertexId>> best;
  for (Rank r = 0; r < pm.ranks; ++r) {
    std::optional<std::pair<std::size_t, VertexId>> local;
    for (const auto p : pm.partitions_of(r)) {
      for (VertexId v = pm.boundaries[p]; v < pm.boundaries[p + 1]; ++v) {
        if (!local || graph.degree(v) > local->first) local = std::pair{graph.degree(v), v};
      }
    }
    if (local && (!best || local->first > best->first || (local->first == best->first && local->second < best->second)))
      best = local;
  }
  return best->second;
}

std::vector<std::vector<VertexId>> plan_initial_push(const Graph& graph, const PartitionMap& pm, VertexId maxdeg) {
  std::vector<std::vector<VertexId>> plan(pm.ranks);
  const auto neighbors = graph.neighbors(maxdeg);
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    const auto u = neighbors[i];
    // Neighbors are sorted, so duplicates are adjacent.
    if (u == maxdeg || (i > 0 && neighbors[i - 1] == u)) continue;
    plan[owner_of(pm, u)].push_back(u);
  }
  return plan;
}

jt::HookOutcome process_zero_converged(ParentArray& parents, VertexId v, VertexId maxdeg) {
  if (v >= parents.size()) throw ProtocolError("zero-converged vertex " + std::to_string(v) + " out of range");
  return jt::hook_edge(parents, v, maxdeg, RootFunction::robin(maxdeg));
}

DistributedResult run_robin(const Graph& graph, const ClusterConfig& config) {
  validate(config);
  detail::Cluster cluster(graph, config, detail::Algorithm::Robin);
  return cluster.run();
}

}  // namespace ccdist
