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

#include <algorithm>

#include "ccdist/graph.hpp"
#include "ccdist/oracle.hpp"
#include "doctest.h"
#include "reference.hpp"

using namespace ccdist;

namespace {

Graph graph_with_degrees(const std::vector<std::size_t>& degrees) {
  EdgeList el{degrees.size(), {}};
  for (VertexId v = 0; v < degrees.size(); ++v)
    for (std::size_t i = 0; i < degrees[v]; ++i) el.edges.push_back({v, (v + 1 + i) % degrees.size()});
  return build_csr(el);
}

}  // namespace

TEST_CASE("load_edge_list parses pairs and infers n") {
  const auto el = load_edge_list("0 1\n1 2");
  CHECK(el.n == 3);
  CHECK(el.edges == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("load_edge_list header widens n") {
  const auto el = load_edge_list("# n 5\n0 1");
  CHECK(el.n == 5);
  CHECK(el.edges.size() == 1);
}

TEST_CASE("load_edge_list comments, blanks and tabs") {
  const auto el = load_edge_list("# a comment\n\n3\t4\n  0   2  \n");
  CHECK(el.n == 5);
  CHECK(el.edges == std::vector<Edge>{{3, 4}, {0, 2}});
}

TEST_CASE("load_edge_list rejects malformed lines with the line number") {
  try {
    load_edge_list("0 x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  try {
    load_edge_list("0 1\n2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load_edge_list("0 1 2"), ParseError);
  CHECK_THROWS_AS(load_edge_list("-1 2"), ParseError);
  CHECK_THROWS_AS(load_edge_list("99999999999999999999999 1"), ParseError);
}

TEST_CASE("load_edge_list endpoint beyond declared n is a bounds error") {
  CHECK_THROWS_AS(load_edge_list("# n 2\n0 2"), BoundsError);
}

TEST_CASE("load_edge_list empty input") {
  const auto el = load_edge_list("");
  CHECK(el.n == 0);
  CHECK(el.edges.empty());
}

TEST_CASE("build_csr examples") {
  SUBCASE("path") {
    const auto g = build_csr({3, {{0, 1}, {1, 2}}});
    CHECK(std::ranges::equal(g.offsets(), std::vector<std::uint64_t>{0, 1, 2, 2}));
    CHECK(std::ranges::equal(g.neighbor_array(), std::vector<VertexId>{1, 2}));
  }
  SUBCASE("empty") {
    const auto g = build_csr({4, {}});
    CHECK(std::ranges::equal(g.offsets(), std::vector<std::uint64_t>{0, 0, 0, 0, 0}));
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("duplicates retained") {
    const auto g = build_csr({2, {{0, 1}, {0, 1}}});
    CHECK(std::ranges::equal(g.offsets(), std::vector<std::uint64_t>{0, 2, 2}));
  }
  SUBCASE("neighbors sorted") {
    const auto g = build_csr({4, {{0, 3}, {0, 1}, {0, 2}, {0, 0}}});
    CHECK(std::ranges::equal(g.neighbors(0), std::vector<VertexId>{0, 1, 2, 3}));
  }
  SUBCASE("out of range") { CHECK_THROWS_AS(build_csr({2, {{0, 2}}}), BoundsError); }
}

TEST_CASE("Graph constructor validates CSR") {
  CHECK_NOTHROW(Graph({0, 1, 1}, {1}));
  CHECK_THROWS(Graph({}, {}));
  CHECK_THROWS(Graph({1, 1}, {}));
  CHECK_THROWS(Graph({0, 2, 1}, {0, 0}));
  CHECK_THROWS(Graph({0, 1}, {1}));
  CHECK_THROWS(Graph({0, 2}, {0}));
}

TEST_CASE("flatten is a permutation of the input and degrees match") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto el = generate_graph(GraphKind::ErdosRenyi, 40, 150, seed);
    const auto g = build_csr(el);
    auto a = el.edges;
    auto b = flatten(g).edges;
    std::ranges::sort(a);
    std::ranges::sort(b);
    CHECK(a == b);
    CHECK(flatten(g).n == el.n);
    for (VertexId v = 0; v < el.n; ++v) {
      const auto count = std::ranges::count_if(el.edges, [&](const Edge& e) { return e.u == v; });
      CHECK(g.degree(v) == static_cast<std::size_t>(count));
    }
  }
}

TEST_CASE("max_degree_vertex examples") {
  CHECK(max_degree_vertex(build_csr(generate_graph(GraphKind::Star, 5, 0, 0))) == 0);
  CHECK(max_degree_vertex(graph_with_degrees({1, 2, 2, 1})) == 1);
  CHECK(max_degree_vertex(build_csr({3, {}})) == 0);
  CHECK_THROWS_AS(max_degree_vertex(Graph{}), DomainError);
}

TEST_CASE("max_degree_vertex matches brute force") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = build_csr(generate_graph(GraphKind::ErdosRenyi, 1 + seed, 3 * seed, seed));
    CHECK(max_degree_vertex(g) == testing::brute_max_degree(g));
  }
}

TEST_CASE("partition_edge_balanced examples") {
  SUBCASE("degrees 3,3,2,1,1 into two") {
    const auto pm = partition_edge_balanced(graph_with_degrees({3, 3, 2, 1, 1}), 2);
    CHECK(pm.boundaries == std::vector<VertexId>{0, 2, 5});
    CHECK(pm.rank_of_partition == std::vector<Rank>{0, 1});
  }
  SUBCASE("k = 1 is the identity partition") {
    const auto g = graph_with_degrees({1, 0, 4});
    CHECK(partition_edge_balanced(g, 1).boundaries == std::vector<VertexId>{0, 3});
  }
  SUBCASE("k > n leaves empty ranges") {
    const auto pm = partition_edge_balanced(graph_with_degrees({1, 1}), 4);
    CHECK(pm.boundaries.size() == 5);
    CHECK(pm.boundaries.front() == 0);
    CHECK(pm.boundaries.back() == 2);
    std::size_t nonempty = 0;
    for (std::size_t p = 0; p < 4; ++p) nonempty += pm.boundaries[p + 1] > pm.boundaries[p];
    CHECK(nonempty == 2);
  }
  SUBCASE("k = 0") { CHECK_THROWS_AS(partition_edge_balanced(graph_with_degrees({1}), 0), DomainError); }
}

TEST_CASE("partition_edge_balanced matches the prefix rule and covers [0, n)") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto n = seed % 30;
    const auto g = build_csr(generate_graph(GraphKind::ErdosRenyi, n, n == 0 ? 0 : 4 * n, seed));
    for (std::size_t k : {1, 2, 3, 5, 8, 40}) {
      const auto pm = partition_edge_balanced(g, k);
      CHECK(pm.boundaries == testing::naive_partition_boundaries(g, k));
      CHECK(pm.partition_count() == k);
      CHECK(std::ranges::is_sorted(pm.boundaries));
      for (VertexId v = 0; v < n; ++v) {
        const auto p = pm.partition_of(v);
        CHECK(pm.boundaries[p] <= v);
        CHECK(v < pm.boundaries[p + 1]);
      }
    }
  }
}

TEST_CASE("owner_of") {
  PartitionMap pm{{0, 2, 5}, {0, 1}, 2};
  CHECK(owner_of(pm, 1) == 0);
  CHECK(owner_of(pm, 4) == 1);
  CHECK_THROWS_AS(owner_of(pm, 5), BoundsError);
}

TEST_CASE("rank assignment") {
  const auto pm = partition_edge_balanced(graph_with_degrees({1, 1, 1, 1, 1, 1, 1, 1}), 8);
  const auto contiguous = assign_contiguous(pm, 3);
  const auto round_robin = assign_round_robin(pm, 3);
  CHECK(contiguous.ranks == 3);
  CHECK(std::ranges::is_sorted(contiguous.rank_of_partition));
  CHECK(round_robin.rank_of_partition == std::vector<Rank>{0, 1, 2, 0, 1, 2, 0, 1});
  for (Rank r = 0; r < 3; ++r) {
    CHECK_FALSE(contiguous.partitions_of(r).empty());
    for (const auto p : round_robin.partitions_of(r)) CHECK(p % 3 == r);
  }
}

TEST_CASE("generate_graph closed forms") {
  CHECK(generate_graph(GraphKind::Path, 4, 0, 0).edges == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(generate_graph(GraphKind::Star, 3, 0, 0).edges == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(generate_graph(GraphKind::Complete, 8, 0, 0).edges.size() == 28);
  CHECK_THROWS_AS(generate_graph(GraphKind::Complete, 8, 5, 0), DomainError);
  CHECK_THROWS_AS(generate_graph(GraphKind::Path, 8, 5, 0), DomainError);
  CHECK_THROWS_AS(generate_graph(GraphKind::ErdosRenyi, 0, 5, 0), DomainError);
  CHECK(generate_graph(GraphKind::Path, 0, 0, 0).n == 0);
}

TEST_CASE("generate_graph is deterministic per seed") {
  for (const auto kind : {GraphKind::ErdosRenyi, GraphKind::PlantedGiant}) {
    CHECK(generate_graph(kind, 200, 800, 7) == generate_graph(kind, 200, 800, 7));
    CHECK_FALSE(generate_graph(kind, 200, 800, 7) == generate_graph(kind, 200, 800, 8));
  }
}

TEST_CASE("planted_giant has a component of at least 94% of vertices") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (std::size_t n : {20, 100, 1000}) {
      const auto g = build_csr(generate_graph(GraphKind::PlantedGiant, n, 3 * n, seed));
      const auto stats = component_stats(bfs_components(g).labels);
      CHECK(stats.largest * 100 >= 94 * n);
      if (n >= 100) CHECK(stats.count > 1);
    }
  }
}

TEST_CASE("graph kind names") {
  for (const auto kind : {GraphKind::ErdosRenyi, GraphKind::PlantedGiant, GraphKind::Path, GraphKind::Star,
                          GraphKind::Complete})
    CHECK(parse_graph_kind(to_string(kind)) == kind);
  CHECK_THROWS_AS(parse_graph_kind("rmat"), DomainError);
}
