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

#ifndef CCDIST_SISKIN_HPP
#define CCDIST_SISKIN_HPP

#include <span>
#include <vector>

#include "ccdist/cluster.hpp"
#include "ccdist/codec.hpp"
#include "ccdist/graph.hpp"
#include "ccdist/jt.hpp"

namespace ccdist {

/**
 * Star-topology distributed CC. Every machine hooks its partitions into a
 * private identity-rooted parent array and streams each successful hook to
 * rank 0, which hooks the pairs like edges and owns the final labels.
 *
 * Throws RunError naming the first failing rank.
 */
DistributedResult run_siskin(const Graph& graph, const ClusterConfig& config);

/// Hooks each pair as edge (child, f^-1(parent_value)).
std::vector<jt::HookOutcome> process_received_pairs(ParentArray& parents, std::span<const ParentPair> pairs,
                                                    const RootFunction& f);

}  // namespace ccdist

#endif  // CCDIST_SISKIN_HPP
