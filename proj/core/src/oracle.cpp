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

#include "ccdist/oracle.hpp"

#include <limits>
#include <unordered_map>

namespace ccdist {

OracleLabels bfs_components(const Graph& graph) {
  const auto n = graph.vertex_count();
  // Transposed index so each edge can be walked backwards too.
  std::vector<std::size_t> in_offsets(n + 1, 0);
  for (const auto v : graph.neighbor_array()) ++in_offsets[v + 1];
  for (std::size_t v = 0; v < n; ++v) in_offsets[v + 1] += in_offsets[v];
  std::vector<VertexId> in_sources(graph.edge_count());
  {
    auto cursor = in_offsets;
    for (VertexId u = 0; u < n; ++u)
      for (const auto v : graph.neighbors(u)) in_sources[cursor[v]++] = u;
  }

  constexpr auto kUnset = std::numeric_limits<VertexId>::max();
  OracleLabels out;
  out.labels.assign(n, kUnset);
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId s = 0; s < n; ++s) {
    if (out.labels[s] != kUnset) continue;
    // Scanning in ID order makes s the minimum of its component.
    queue.clear();
    queue.push_back(s);
    out.labels[s] = s;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      auto visit = [&](VertexId w) {
        if (out.labels[w] == kUnset) {
          out.labels[w] = s;
          queue.push_back(w);
        }
      };
      for (const auto w : graph.neighbors(u)) visit(w);
      for (auto i = in_offsets[u]; i < in_offsets[u + 1]; ++i) visit(in_sources[i]);
    }
    ++out.component_count;
    out.component_sizes.push_back(queue.size());
  }
  return out;
}

bool partitions_equivalent(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  if (a.size() != b.size())
    throw DomainError("label arrays differ in length: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  std::unordered_map<std::uint64_t, std::uint64_t> forward;
  std::unordered_map<std::uint64_t, std::uint64_t> backward;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto [f, fresh_f] = forward.try_emplace(a[i], b[i]);
    if (f->second != b[i]) return false;
    const auto [g, fresh_g] = backward.try_emplace(b[i], a[i]);
    if (g->second != a[i]) return false;
  }
  return true;
}

bool check_canonical_labels(const Graph& graph, std::span<const RootValue> labels, const RootFunction& f) {
  const auto n = graph.vertex_count();
  if (labels.size() != n) return false;
  const auto oracle = bfs_components(graph);
  // Oracle labels are component minima, so they index the per-component best.
  std::vector<RootValue> best(n, std::numeric_limits<RootValue>::max());
  for (VertexId v = 0; v < n; ++v) best[oracle.labels[v]] = std::min(best[oracle.labels[v]], f.forward(v));
  for (VertexId v = 0; v < n; ++v)
    if (labels[v] != best[oracle.labels[v]]) return false;
  return true;
}

ComponentStats component_stats(std::span<const std::uint64_t> labels) {
  std::unordered_map<std::uint64_t, std::size_t> sizes;
  for (const auto l : labels) ++sizes[l];
  ComponentStats stats;
  stats.count = sizes.size();
  for (const auto& [label, size] : sizes) {
    stats.largest = std::max(stats.largest, size);
    ++stats.histogram[size];
  }
  return stats;
}

}  // namespace ccdist
