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

#ifndef CCDIST_ROBIN_HPP
#define CCDIST_ROBIN_HPP

#include <vector>

#include "ccdist/cluster.hpp"
#include "ccdist/graph.hpp"
#include "ccdist/jt.hpp"

namespace ccdist {

/// 0 for the hub, v + 1 otherwise.
RootValue robin_root(VertexId v, VertexId maxdeg) noexcept;

/// Inverse of robin_root. Throws ProtocolError for maxdeg + 1, which no vertex maps to.
VertexId robin_root_inv(RootValue c, VertexId maxdeg);

/// Per-rank local maxima over owned ranges, reduced to the highest degree
/// (lowest ID on ties). Throws DomainError on an empty graph.
VertexId global_max_degree(const Graph& graph, const PartitionMap& pm);

/**
 * Zero-converged records the hub's owner sends at startup, indexed by
 * destination rank. Neighbors are deduplicated and the hub itself is skipped.
 */
std::vector<std::vector<VertexId>> plan_initial_push(const Graph& graph, const PartitionMap& pm, VertexId maxdeg);

/// Hooks v to the hub under the robin root function.
jt::HookOutcome process_zero_converged(ParentArray& parents, VertexId v, VertexId maxdeg);

/**
 * Binomial-tree distributed CC with the hub planted at root value 0.
 * Labels are 0 on the hub's component and 1 + min vertex elsewhere.
 *
 * Throws RunError naming the first failing rank.
 */
DistributedResult run_robin(const Graph& graph, const ClusterConfig& config);

}  // namespace ccdist

#endif  // CCDIST_ROBIN_HPP
