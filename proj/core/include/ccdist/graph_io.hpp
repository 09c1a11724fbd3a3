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

#ifndef CCDIST_GRAPH_IO_HPP
#define CCDIST_GRAPH_IO_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "ccdist/graph.hpp"

namespace ccdist {

// Binary CSR layout (all little-endian):
//   "CCFB" | u32 version | u64 n | u64 m | (n+1) x u64 offsets | m x w neighbors
// with w = 4 when n < 2^32 and 8 otherwise.
inline constexpr std::uint32_t kCcfbVersion = 1;

/// Neighbor width used by the binary format for a graph of n vertices.
unsigned ccfb_neighbor_width(std::size_t n) noexcept;

std::vector<std::byte> encode_ccfb(const Graph& graph);
/// Throws CodecError on bad magic, unknown version, truncation or trailing bytes.
Graph decode_ccfb(std::span<const std::byte> bytes);

/// Writes "# n <count>" followed by one "u v" line per stored edge.
void write_edge_list(std::ostream& out, const EdgeList& edges);

enum class GraphFormat { EdgeList, Ccfb };

/// ".ccfb" selects the binary format, anything else the text edge list.
GraphFormat format_from_path(const std::filesystem::path& path);

Graph read_graph(const std::filesystem::path& path, GraphFormat format);
void write_graph(const std::filesystem::path& path, const EdgeList& edges, GraphFormat format);

}  // namespace ccdist

#endif  // CCDIST_GRAPH_IO_HPP
