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

#ifndef CCDIST_TOOLS_REPORT_HPP
#define CCDIST_TOOLS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccdist/machine_stats.hpp"

namespace ccdist::cli {

struct RunReport {
  std::string algorithm;
  std::string graph_path;
  std::size_t n = 0;
  std::size_t m = 0;
  Rank machines = 1;
  std::size_t workers = 1;
  std::size_t buffer_capacity = 0;
  std::uint64_t seed = 0;
  std::string root_function;
  unsigned id_width = 0;
  std::vector<MachineStats> per_machine;
  std::size_t component_count = 0;
  std::size_t largest_component_size = 0;
  std::uint64_t labels_hash = 0;
  /// Empty when verification was not requested.
  std::optional<bool> verified;
  double wall_time_seconds = 0.0;
};

/// Pretty-printed JSON with a fixed field order.
std::string to_json(const RunReport& report);

}  // namespace ccdist::cli

#endif  // CCDIST_TOOLS_REPORT_HPP
