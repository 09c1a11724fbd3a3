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

#include <atomic>

#include "ccdist/oracle.hpp"
#include "ccdist/robin.hpp"
#include "ccdist/siskin.hpp"
#include "doctest.h"
#include "reference.hpp"

using namespace ccdist;

namespace {

using Runner = DistributedResult (*)(const Graph&, const ClusterConfig&);

constexpr Runner kRunners[] = {&run_siskin, &run_robin};

ClusterConfig config(Rank m) {
  ClusterConfig c;
  c.machines = m;
  c.workers = 2;
  c.buffer_capacity = 8;
  c.buffer_blocks = 3;
  return c;
}

}  // namespace

TEST_CASE("config validation") {
  const auto g = build_csr(generate_graph(GraphKind::Path, 4, 0, 0));
  for (const auto run : kRunners) {
    auto c = config(2);
    c.machines = 0;
    CHECK_THROWS_AS(run(g, c), DomainError);
    c = config(2);
    c.workers = 0;
    CHECK_THROWS_AS(run(g, c), DomainError);
    c = config(2);
    c.buffer_capacity = 0;
    CHECK_THROWS_AS(run(g, c), DomainError);
    c = config(2);
    c.buffer_blocks = 70000;
    CHECK_THROWS_AS(run(g, c), DomainError);
    c = config(2);
    c.partitions_per_machine = 0;
    CHECK_THROWS_AS(run(g, c), DomainError);
    c = config(2);
    c.mailbox_capacity = 0;
    CHECK_THROWS_AS(run(g, c), DomainError);
  }
}

TEST_CASE("byte conservation across the transport") {
  const auto g = build_csr(generate_graph(GraphKind::PlantedGiant, 2000, 6000, 3));
  for (const auto run : kRunners) {
    for (Rank m : {2u, 5u, 8u}) {
      const auto r = run(g, config(m));
      CHECK(r.total_bytes_sent() == r.total_bytes_received());
      for (Rank a = 0; a < m; ++a) {
        std::uint64_t to_sum = 0;
        for (Rank b = 0; b < m; ++b) {
          CHECK(r.machines[a].bytes_sent_to[b] == r.machines[b].bytes_received_from[a]);
          to_sum += r.machines[a].bytes_sent_to[b];
        }
        CHECK(to_sum == r.machines[a].bytes_sent());
        CHECK(r.machines[a].bytes_sent_to[a] == 0);
      }
      for (const auto type : {MessageType::ZeroConverged, MessageType::ParentPair, MessageType::Done}) {
        std::uint64_t sent = 0;
        std::uint64_t received = 0;
        for (const auto& s : r.machines) {
          sent += s.of(type).records_sent;
          received += s.of(type).records_received;
        }
        CHECK(sent == received);
      }
    }
  }
}

TEST_CASE("a one-frame mailbox and one-record buffers still finish") {
  const auto g = build_csr(generate_graph(GraphKind::PlantedGiant, 800, 2400, 9));
  const auto expected = testing::union_find_labels(g);
  for (const auto run : kRunners) {
    auto c = config(8);
    c.mailbox_capacity = 1;
    c.buffer_capacity = 1;
    c.buffer_blocks = 1;
    c.workers = 3;
    const auto r = run(g, c);
    CHECK(partitions_equivalent(r.labels, expected));
  }
}

TEST_CASE("more machines than vertices") {
  const auto g = build_csr({3, {{0, 1}}});
  for (const auto run : kRunners) {
    const auto r = run(g, config(8));
    CHECK(partitions_equivalent(r.labels, std::vector<std::uint64_t>{0, 0, 2}));
    CHECK(r.machines.size() == 8);
  }
}

TEST_CASE("empty graph") {
  for (const auto run : kRunners) {
    const auto r = run(Graph{}, config(4));
    CHECK(r.labels.empty());
    CHECK(r.machines.size() == 4);
    CHECK(r.total_bytes_sent() == 0);
  }
}

TEST_CASE("a corrupted frame fails the run with the receiving rank") {
  const auto g = build_csr(generate_graph(GraphKind::PlantedGiant, 500, 2000, 1));
  for (const auto run : kRunners) {
    auto c = config(4);
    c.frame_hook = [](Rank, Rank, Frame& frame) { frame[0] = std::byte{0x7f}; };
    try {
      run(g, c);
      FAIL("expected RunError");
    } catch (const RunError& e) {
      CHECK(e.rank() < 4);
      CHECK(std::string(e.what()).find("type") != std::string::npos);
    }
  }
}

TEST_CASE("a root value outside the image is a protocol error") {
  const auto g = build_csr(generate_graph(GraphKind::PlantedGiant, 500, 2000, 2));
  auto c = config(2);
  std::atomic<bool> done{false};
  // Rewrite the first pair record's value (w bytes after the child) to all ones.
  c.frame_hook = [&](Rank, Rank, Frame& frame) {
    if (std::to_integer<int>(frame[0]) == 2 && !done.exchange(true)) {
      const std::size_t w = 2;
      for (std::size_t i = 0; i < w; ++i) frame[kFrameHeaderBytes + w + i] = std::byte{0xff};
    }
  };
  CHECK_THROWS_AS(run_siskin(g, c), RunError);
}

TEST_CASE("a mangled Done frame fails the run") {
  const auto g = build_csr(generate_graph(GraphKind::Path, 50, 0, 0));
  auto c = config(2);
  c.frame_hook = [](Rank, Rank, Frame& frame) {
    // A pair frame claiming one record but carrying no payload.
    if (std::to_integer<int>(frame[0]) == 3) frame[0] = std::byte{2};
  };
  CHECK_THROWS_AS(run_siskin(g, c), RunError);
}

TEST_CASE("repeated runs never hang") {
  const auto g = build_csr(generate_graph(GraphKind::ErdosRenyi, 200, 400, 11));
  const auto expected = testing::union_find_labels(g);
  for (int i = 0; i < 50; ++i) {
    for (const auto run : kRunners) {
      auto c = config(1 + i % 8);
      c.randomize_priority = i % 2 == 1;
      c.seed = i;
      CHECK(partitions_equivalent(run(g, c).labels, expected));
    }
  }
}
