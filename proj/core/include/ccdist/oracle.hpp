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

#ifndef CCDIST_ORACLE_HPP
#define CCDIST_ORACLE_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ccdist/graph.hpp"
#include "ccdist/root_function.hpp"

namespace ccdist {

struct OracleLabels {
  /// Minimum vertex ID of each vertex's component, edges taken as undirected.
  std::vector<VertexId> labels;
  std::size_t component_count = 0;
  /// Indexed by component in order of first appearance.
  std::vector<std::size_t> component_sizes;
};

/// Sequential BFS over the stored edges and their reverses.
OracleLabels bfs_components(const Graph& graph);

/// Whether a and b induce the same partition. Throws DomainError on a length mismatch.
bool partitions_equivalent(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// Whether labels[v] is the minimum f-value over v's component.
bool check_canonical_labels(const Graph& graph, std::span<const RootValue> labels, const RootFunction& f);

struct ComponentStats {
  std::size_t count = 0;
  std::size_t largest = 0;
  /// Component size to number of components of that size.
  std::map<std::size_t, std::size_t> histogram;
  friend bool operator==(const ComponentStats&, const ComponentStats&) = default;
};

ComponentStats component_stats(std::span<const std::uint64_t> labels);

}  // namespace ccdist

#endif  // CCDIST_ORACLE_HPP
