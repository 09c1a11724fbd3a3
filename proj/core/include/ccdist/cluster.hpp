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

#ifndef CCDIST_CLUSTER_HPP
#define CCDIST_CLUSTER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ccdist/machine_stats.hpp"
#include "ccdist/root_function.hpp"
#include "ccdist/transport.hpp"
#include "ccdist/types.hpp"

namespace ccdist {

/// Knobs shared by the distributed engines.
struct ClusterConfig {
  Rank machines = 1;
  /// Worker threads per machine, on top of one communication handler.
  std::size_t workers = 1;
  std::size_t partitions_per_machine = 4;
  /// Records per outgoing buffer before it is flushed.
  std::size_t buffer_capacity = 65536;
  /// Blocks per buffer; receivers hand blocks to workers independently.
  std::size_t buffer_blocks = 64;
  /// Frames a receiver's mailbox holds before senders are pushed back.
  std::size_t mailbox_capacity = 64;
  /// Count successful CASes per slot during hooking.
  bool audit_updates = false;
  /// Keep a TraceRecord for every data record sent.
  bool trace = false;
  /// Shuffle the worklist source order on every pick.
  bool randomize_priority = false;
  std::uint64_t seed = 0;
  /// Called on every frame right before it enters the transport.
  std::function<void(Rank source, Rank dest, Frame& frame)> frame_hook;
};

/// Throws DomainError on a zero machine/worker/partition/buffer setting.
void validate(const ClusterConfig& config);

struct DistributedResult {
  /// Final parent array of rank 0: one root value per vertex.
  std::vector<RootValue> labels;
  std::vector<MachineStats> machines;
  RootFunction root_function = RootFunction::identity();
  /// Bytes per ID on the wire.
  unsigned id_width = 1;

  std::uint64_t total_data_records_sent() const noexcept;
  std::uint64_t total_bytes_sent() const noexcept;
  std::uint64_t total_bytes_received() const noexcept;
  std::uint64_t total_edges_processed() const noexcept;
};

}  // namespace ccdist

#endif  // CCDIST_CLUSTER_HPP
