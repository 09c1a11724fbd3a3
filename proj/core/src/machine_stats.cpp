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

#include "ccdist/machine_stats.hpp"

namespace ccdist {

std::uint64_t MachineStats::data_records_sent() const noexcept {
  return of(MessageType::ZeroConverged).records_sent + of(MessageType::ParentPair).records_sent;
}

std::uint64_t MachineStats::data_records_received() const noexcept {
  return of(MessageType::ZeroConverged).records_received + of(MessageType::ParentPair).records_received;
}

std::uint64_t MachineStats::bytes_sent() const noexcept {
  std::uint64_t total = 0;
  for (const auto& t : traffic) total += t.bytes_sent;
  return total;
}

std::uint64_t MachineStats::bytes_received() const noexcept {
  std::uint64_t total = 0;
  for (const auto& t : traffic) total += t.bytes_received;
  return total;
}

void record_timestamp(MachineStats& stats, Timestamp which, const MachineClock& clock) {
  stats.timestamps[static_cast<std::size_t>(which)] = clock.elapsed();
}

bool conclude(const ConcludeState& state) noexcept {
  return state.partitions_done && state.done_received >= state.children && state.undrained == 0;
}

}  // namespace ccdist
