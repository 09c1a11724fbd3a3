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

#include "ccdist/siskin.hpp"

#include "runtime.hpp"

namespace ccdist {

DistributedResult run_siskin(const Graph& graph, const ClusterConfig& config) {
  validate(config);
  detail::Cluster cluster(graph, config, detail::Algorithm::Siskin);
  return cluster.run();
}

std::vector<jt::HookOutcome> process_received_pairs(ParentArray& parents, std::span<const ParentPair> pairs,
                                                    const RootFunction& f) {
  std::vector<jt::HookOutcome> outcomes;
  outcomes.reserve(pairs.size());
  const auto n = parents.size();
  for (const auto& pair : pairs) {
    if (pair.child >= n) throw ProtocolError("parent pair child " + std::to_string(pair.child) + " out of range");
    outcomes.push_back(jt::hook_edge(parents, pair.child, f.checked_inverse(pair.parent_value, n), f));
  }
  return outcomes;
}

}  // namespace ccdist
