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

#ifndef CCDIST_TOOLS_CLI_HPP
#define CCDIST_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccdist/graph_io.hpp"
#include "ccdist/types.hpp"

namespace ccdist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnverified = 2;

struct RunOptions {
  /// jt, rfjt, siskin or robin.
  std::string algo = "jt";
  std::string graph;
  std::optional<GraphFormat> format;
  Rank machines = 1;
  std::size_t workers = 1;
  std::size_t buffer_capacity = 65536;
  bool verify = false;
  /// Report destination; "-" writes to the output stream, empty skips it.
  std::string report;
  std::uint64_t seed = 0;
};

struct GenOptions {
  std::string kind;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::optional<GraphFormat> format;
};

struct ConvertOptions {
  std::string in;
  std::string out;
  std::optional<GraphFormat> in_format;
  std::optional<GraphFormat> out_format;
};

/// FNV-1a over the little-endian bytes of every label.
std::uint64_t labels_hash(std::span<const std::uint64_t> labels) noexcept;

GraphFormat parse_format(const std::string& name);

/// Runs one engine and returns the exit code; the JSON report text goes to report_text.
int cmd_run(const RunOptions& options, std::string& report_text);
int cmd_gen(const GenOptions& options);
int cmd_convert(const ConvertOptions& options);

/// Full command-line entry point. Errors are printed to err, never thrown.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccdist::cli

#endif  // CCDIST_TOOLS_CLI_HPP
