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

#ifndef CCDIST_GRAPH_HPP
#define CCDIST_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ccdist/types.hpp"

namespace ccdist {

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed edge multiset over vertices [0, n). Symmetry is not required.
struct EdgeList {
  std::size_t n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

/**
 * Immutable compressed sparse row adjacency.
 *
 * Edges are stored in the direction they were given; neighbors of each
 * vertex are sorted ascending. Duplicates and self-loops are kept.
 */
class Graph {
 public:
  Graph() : offsets_{0} {}
  /// Validates the CSR invariants; throws DomainError/BoundsError on violation.
  Graph(std::vector<std::uint64_t> offsets, std::vector<VertexId> neighbors);

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size(); }

  std::size_t degree(VertexId v) const noexcept {
    return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {neighbors_.data() + offsets_[v], degree(v)};
  }

  std::span<const std::uint64_t> offsets() const noexcept { return offsets_; }
  std::span<const VertexId> neighbor_array() const noexcept { return neighbors_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> neighbors_;
};

/**
 * Contiguous vertex ranges and their assignment to machine ranks.
 *
 * Partition p covers [boundaries[p], boundaries[p+1]); ranges may be empty.
 */
struct PartitionMap {
  std::vector<VertexId> boundaries;
  std::vector<Rank> rank_of_partition;
  Rank ranks = 1;

  std::size_t partition_count() const noexcept { return rank_of_partition.size(); }
  std::size_t vertex_count() const noexcept {
    return boundaries.empty() ? 0 : static_cast<std::size_t>(boundaries.back());
  }
  /// Partitions assigned to \p rank, in ascending index order.
  std::vector<std::size_t> partitions_of(Rank rank) const;
  /// Index of the partition whose range contains v.
  std::size_t partition_of(VertexId v) const;
};

/// Parses "u v" lines; '#' lines are comments, "# n <count>" declares n.
EdgeList load_edge_list(std::istream& in);
EdgeList load_edge_list(std::string_view text);

Graph build_csr(const EdgeList& edges);

/// Inverse of build_csr up to the per-vertex neighbor sort.
EdgeList flatten(const Graph& graph);

/// Vertex of maximum stored out-degree, lowest ID on ties.
VertexId max_degree_vertex(const Graph& graph);

/// Greedy edge-balanced split into k contiguous ranges, partition p on rank p.
PartitionMap partition_edge_balanced(const Graph& graph, std::size_t k);

/// Reassigns partitions to m ranks in contiguous runs (rank r gets a block).
PartitionMap assign_contiguous(PartitionMap pm, Rank m);
/// Reassigns partitions to m ranks round-robin by partition index.
PartitionMap assign_round_robin(PartitionMap pm, Rank m);

Rank owner_of(const PartitionMap& pm, VertexId v);

/// Stored edges of a partition (all out-edges of its vertex range).
std::size_t partition_edge_count(const Graph& graph, const PartitionMap& pm, std::size_t p);

enum class GraphKind { ErdosRenyi, PlantedGiant, Path, Star, Complete };

GraphKind parse_graph_kind(std::string_view name);
std::string_view to_string(GraphKind kind);

/**
 * Deterministic synthetic graphs for tests and benchmarks.
 *
 * ErdosRenyi draws m_target endpoint pairs uniformly (self-loops and
 * duplicates possible). PlantedGiant builds one component over at least 95%
 * of the vertices with a skewed-degree hub and path-shaped satellites, then
 * tops it up with extra giant edges to reach m_target. Path, Star and
 * Complete are closed-form and require m_target == 0.
 */
EdgeList generate_graph(GraphKind kind, std::size_t n, std::size_t m_target, std::uint64_t seed);

}  // namespace ccdist

#endif  // CCDIST_GRAPH_HPP
