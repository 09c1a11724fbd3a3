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

#include "ccdist/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

namespace ccdist {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on spaces and tabs.
std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_u64(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

Graph::Graph(std::vector<std::uint64_t> offsets, std::vector<VertexId> neighbors)
    : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)) {
  if (offsets_.empty() || offsets_.front() != 0)
    throw DomainError("CSR offsets must start with 0");
  if (offsets_.back() != neighbors_.size())
    throw DomainError("CSR offsets must end with the neighbor count");
  if (!std::is_sorted(offsets_.begin(), offsets_.end()))
    throw DomainError("CSR offsets must be nondecreasing");
  const auto n = vertex_count();
  for (const auto u : neighbors_)
    if (u >= n) throw BoundsError("CSR neighbor " + std::to_string(u) + " >= n");
}

std::vector<std::size_t> PartitionMap::partitions_of(Rank rank) const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < rank_of_partition.size(); ++p)
    if (rank_of_partition[p] == rank) out.push_back(p);
  return out;
}

std::size_t PartitionMap::partition_of(VertexId v) const {
  if (v >= vertex_count())
    throw BoundsError("vertex " + std::to_string(v) + " outside partition map");
  // Last boundary <= v; empty ranges sharing the start are skipped over.
  const auto it = std::upper_bound(boundaries.begin(), boundaries.end(), v);
  return static_cast<std::size_t>(it - boundaries.begin()) - 1;
}

EdgeList load_edge_list(std::istream& in) {
  EdgeList out;
  bool declared = false;
  std::uint64_t declared_n = 0;
  std::uint64_t max_endpoint = 0;
  std::size_t max_endpoint_line = 0;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto toks = tokens(line.substr(1));
      if (toks.size() == 2 && toks[0] == "n") {
        std::uint64_t value = 0;
        if (!parse_u64(toks[1], value)) throw ParseError(line_no, "bad vertex count in header");
        if (declared) throw ParseError(line_no, "duplicate '# n' header");
        declared = true;
        declared_n = value;
      }
      continue;
    }
    const auto toks = tokens(line);
    Edge e;
    if (toks.size() != 2 || !parse_u64(toks[0], e.u) || !parse_u64(toks[1], e.v))
      throw ParseError(line_no, "expected two unsigned integers, got '" + std::string(line) + "'");
    const auto hi = std::max(e.u, e.v);
    if (out.edges.empty() || hi > max_endpoint) {
      max_endpoint = hi;
      max_endpoint_line = line_no;
    }
    out.edges.push_back(e);
  }
  if (declared) {
    if (!out.edges.empty() && max_endpoint >= declared_n)
      throw BoundsError("line " + std::to_string(max_endpoint_line) + ": endpoint " +
                        std::to_string(max_endpoint) + " >= declared n " + std::to_string(declared_n));
    out.n = declared_n;
  } else {
    out.n = out.edges.empty() ? 0 : max_endpoint + 1;
  }
  return out;
}

EdgeList load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

Graph build_csr(const EdgeList& list) {
  const auto n = list.n;
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (const auto& e : list.edges) {
    if (e.u >= n || e.v >= n)
      throw BoundsError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside n=" +
                        std::to_string(n));
    ++offsets[e.u + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<VertexId> neighbors(list.edges.size());
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : list.edges) neighbors[cursor[e.u]++] = e.v;
  for (std::size_t v = 0; v < n; ++v)
    std::sort(neighbors.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              neighbors.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
  return Graph(std::move(offsets), std::move(neighbors));
}

EdgeList flatten(const Graph& graph) {
  EdgeList out;
  out.n = graph.vertex_count();
  out.edges.reserve(graph.edge_count());
  for (VertexId u = 0; u < out.n; ++u)
    for (const auto v : graph.neighbors(u)) out.edges.push_back({u, v});
  return out;
}

VertexId max_degree_vertex(const Graph& graph) {
  const auto n = graph.vertex_count();
  if (n == 0) throw DomainError("max_degree_vertex of an empty graph");
  VertexId best = 0;
  for (VertexId v = 1; v < n; ++v)
    if (graph.degree(v) > graph.degree(best)) best = v;
  return best;
}

PartitionMap partition_edge_balanced(const Graph& graph, std::size_t k) {
  if (k == 0) throw DomainError("partition count must be at least 1");
  const auto n = graph.vertex_count();
  PartitionMap pm;
  pm.boundaries.assign(k + 1, 0);
  pm.rank_of_partition.resize(k);
  std::iota(pm.rank_of_partition.begin(), pm.rank_of_partition.end(), Rank{0});
  pm.ranks = static_cast<Rank>(k);

  std::uint64_t remaining = graph.edge_count();
  VertexId v = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const std::uint64_t ranges_left = k - i;
    const std::uint64_t target = (remaining + ranges_left - 1) / ranges_left;
    std::uint64_t taken = 0;
    while (taken < target && v < n) taken += graph.degree(v++);
    pm.boundaries[i + 1] = v;
    remaining -= taken;
  }
  pm.boundaries[k] = n;
  return pm;
}

PartitionMap assign_contiguous(PartitionMap pm, Rank m) {
  if (m == 0) throw DomainError("rank count must be at least 1");
  const auto k = pm.partition_count();
  for (std::size_t p = 0; p < k; ++p)
    pm.rank_of_partition[p] = static_cast<Rank>(p * m / k);
  pm.ranks = m;
  return pm;
}

PartitionMap assign_round_robin(PartitionMap pm, Rank m) {
  if (m == 0) throw DomainError("rank count must be at least 1");
  for (std::size_t p = 0; p < pm.partition_count(); ++p)
    pm.rank_of_partition[p] = static_cast<Rank>(p % m);
  pm.ranks = m;
  return pm;
}

Rank owner_of(const PartitionMap& pm, VertexId v) {
  return pm.rank_of_partition[pm.partition_of(v)];
}

std::size_t partition_edge_count(const Graph& graph, const PartitionMap& pm, std::size_t p) {
  const auto offsets = graph.offsets();
  return static_cast<std::size_t>(offsets[pm.boundaries[p + 1]] - offsets[pm.boundaries[p]]);
}

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "erdos_renyi") return GraphKind::ErdosRenyi;
  if (name == "planted_giant") return GraphKind::PlantedGiant;
  if (name == "path") return GraphKind::Path;
  if (name == "star") return GraphKind::Star;
  if (name == "complete") return GraphKind::Complete;
  throw DomainError("unknown graph kind '" + std::string(name) + "'");
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::ErdosRenyi: return "erdos_renyi";
    case GraphKind::PlantedGiant: return "planted_giant";
    case GraphKind::Path: return "path";
    case GraphKind::Star: return "star";
    case GraphKind::Complete: return "complete";
  }
  return "unknown";
}

namespace {

VertexId uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

EdgeList planted_giant(std::size_t n, std::size_t m_target, std::uint64_t seed) {
  EdgeList out;
  out.n = n;
  if (n == 0) return out;
  std::mt19937_64 rng(seed);
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);

  // Satellites exist only once n >= 20, and then the giant has >= 19 members.
  const std::size_t giant = n - n / 20;
  const VertexId hub = perm[0];

  // Endpoint pool: sampling from it is degree-proportional.
  std::vector<VertexId> pool{hub};
  for (std::size_t i = 1; i < giant; ++i) {
    const VertexId x = perm[i];
    const VertexId t = i <= 2 ? hub : pool[uniform_below(rng, pool.size())];
    out.edges.push_back({t, x});
    pool.push_back(t);
    pool.push_back(x);
  }
  // Path-shaped satellites of 1 to 3 vertices; stored out-degree <= 1.
  std::size_t i = giant;
  while (i < n) {
    const std::size_t len = std::min<std::size_t>(1 + uniform_below(rng, 3), n - i);
    for (std::size_t j = 1; j < len; ++j) out.edges.push_back({perm[i + j - 1], perm[i + j]});
    i += len;
  }
  while (out.edges.size() < m_target) {
    const VertexId t = pool[uniform_below(rng, pool.size())];
    const VertexId x = perm[uniform_below(rng, giant)];
    out.edges.push_back({t, x});
    pool.push_back(t);
    pool.push_back(x);
  }
  return out;
}

}  // namespace

EdgeList generate_graph(GraphKind kind, std::size_t n, std::size_t m_target, std::uint64_t seed) {
  EdgeList out;
  out.n = n;
  switch (kind) {
    case GraphKind::ErdosRenyi: {
      if (n == 0 && m_target > 0) throw DomainError("erdos_renyi needs n >= 1 to place edges");
      std::mt19937_64 rng(seed);
      out.edges.reserve(m_target);
      for (std::size_t i = 0; i < m_target; ++i) {
        const auto u = uniform_below(rng, n);
        const auto v = uniform_below(rng, n);
        out.edges.push_back({u, v});
      }
      return out;
    }
    case GraphKind::PlantedGiant:
      return planted_giant(n, m_target, seed);
    case GraphKind::Path:
    case GraphKind::Star:
    case GraphKind::Complete:
      if (m_target != 0)
        throw DomainError(std::string(to_string(kind)) + " has a closed-form edge count; m_target must be 0");
      break;
  }
  if (kind == GraphKind::Path) {
    for (VertexId v = 0; v + 1 < n; ++v) out.edges.push_back({v, v + 1});
  } else if (kind == GraphKind::Star) {
    for (VertexId v = 1; v < n; ++v) out.edges.push_back({0, v});
  } else {
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) out.edges.push_back({u, v});
  }
  return out;
}

}  // namespace ccdist
