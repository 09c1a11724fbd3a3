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

#ifndef CCDIST_MACHINE_STATS_HPP
#define CCDIST_MACHINE_STATS_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <vector>

#include "ccdist/codec.hpp"
#include "ccdist/types.hpp"

namespace ccdist {

struct TrafficCounters {
  std::uint64_t records_sent = 0;
  std::uint64_t bytes_sent = 0;
  std::uint64_t records_received = 0;
  std::uint64_t bytes_received = 0;
};

/// When a record was produced.
enum class Phase : std::uint8_t { InitialPush, Computation, Final };

/// One data record handed to the transport, kept when tracing is enabled.
struct TraceRecord {
  Rank dest = 0;
  MessageType type = MessageType::ZeroConverged;
  Phase phase = Phase::Computation;
  VertexId vertex = 0;
  RootValue value = 0;
};

/// T1 own edges done, T2 incoming messages done, T3 pointer jumping done,
/// T4 final sends done. Seconds since the machine started.
enum class Timestamp : std::uint8_t { T1 = 0, T2 = 1, T3 = 2, T4 = 3 };

struct MachineStats {
  Rank rank = 0;
  /// Indexed by type_index(MessageType). Bytes include frame headers.
  std::array<TrafficCounters, kMessageTypeCount> traffic{};
  std::vector<std::uint64_t> bytes_sent_to;
  std::vector<std::uint64_t> bytes_received_from;
  std::uint64_t frames_sent = 0;
  std::uint64_t frames_received = 0;

  std::array<double, 4> timestamps{};

  std::uint64_t edges_processed = 0;
  std::uint64_t messages_processed = 0;
  /// Most successful CASes on any one slot during hooking (when audited).
  std::uint32_t max_slot_updates = 0;

  std::vector<TraceRecord> trace;

  const TrafficCounters& of(MessageType type) const { return traffic[type_index(type)]; }
  TrafficCounters& of(MessageType type) { return traffic[type_index(type)]; }

  /// ZeroConverged + ParentPair records; Done sentinels excluded.
  std::uint64_t data_records_sent() const noexcept;
  std::uint64_t data_records_received() const noexcept;
  std::uint64_t bytes_sent() const noexcept;
  std::uint64_t bytes_received() const noexcept;

  double at(Timestamp which) const noexcept { return timestamps[static_cast<std::size_t>(which)]; }
};

class MachineClock {
 public:
  MachineClock() : start_(std::chrono::steady_clock::now()) {}
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Stores the clock's elapsed seconds into \p which.
void record_timestamp(MachineStats& stats, Timestamp which, const MachineClock& clock);

struct ConcludeState {
  bool partitions_done = false;
  std::size_t children = 0;
  std::size_t done_received = 0;
  /// Received frames or blocks not yet fully processed.
  std::size_t undrained = 0;
};

/// True once local partitions are done, every child has sent Done, and
/// nothing received is left unprocessed.
bool conclude(const ConcludeState& state) noexcept;

}  // namespace ccdist

#endif  // CCDIST_MACHINE_STATS_HPP
