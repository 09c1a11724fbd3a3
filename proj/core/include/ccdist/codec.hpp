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

#ifndef CCDIST_CODEC_HPP
#define CCDIST_CODEC_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ccdist/types.hpp"

namespace ccdist {

enum class MessageType : std::uint8_t { ZeroConverged = 1, ParentPair = 2, Done = 3 };

inline constexpr std::size_t kMessageTypeCount = 3;
std::string_view to_string(MessageType type);
inline std::size_t type_index(MessageType type) noexcept { return static_cast<std::size_t>(type) - 1; }

/// A vertex that has just joined the zero-rooted component.
struct ZeroConverged {
  VertexId vertex = 0;
  friend bool operator==(const ZeroConverged&, const ZeroConverged&) = default;
};

/// child's slot now holds parent_value.
struct ParentPair {
  VertexId child = 0;
  RootValue parent_value = 0;
  friend bool operator==(const ParentPair&, const ParentPair&) = default;
};

/// Sender has finished its final sends. Carries no payload on the wire;
/// the rank comes from the transport envelope.
struct Done {
  Rank rank = 0;
  friend bool operator==(const Done&, const Done&) = default;
};

using Message = std::variant<ZeroConverged, ParentPair, Done>;

MessageType type_of(const Message& m) noexcept;

/// Bytes per encoded vertex ID: max(1, ceil(log2(n) / 8)).
unsigned id_byte_width(std::size_t n);

// Frame: u8 type | u32 record_count | u16 block_count | records, all LE.
inline constexpr std::size_t kFrameHeaderBytes = 7;
inline constexpr std::size_t kMaxBlocks = UINT16_MAX;

/// Bytes per record of \p type at ID width w.
std::size_t record_bytes(MessageType type, unsigned width) noexcept;

/**
 * Homogeneous run of records before encoding / after decoding.
 *
 * Fields are stored flat: one per ZeroConverged record, two per
 * ParentPair record, none for Done.
 */
struct MessageBuffer {
  MessageType type = MessageType::ZeroConverged;
  std::size_t record_count = 0;
  std::uint16_t block_count = 0;
  std::vector<std::uint64_t> fields;

  void add_zero_converged(VertexId v) {
    fields.push_back(v);
    ++record_count;
  }
  void add_parent_pair(VertexId child, RootValue value) {
    fields.push_back(child);
    fields.push_back(value);
    ++record_count;
  }
  void add_done() { ++record_count; }
  bool empty() const noexcept { return record_count == 0; }
  void clear() noexcept {
    record_count = 0;
    block_count = 0;
    fields.clear();
  }

  /// Records [begin, end) of block b out of block_count.
  std::pair<std::size_t, std::size_t> block(std::size_t b) const noexcept;
  std::vector<Message> messages(Rank sender = 0) const;
};

/// Block count written into a frame holding \p records records.
std::uint16_t blocks_for(std::size_t records, std::size_t configured_blocks) noexcept;

std::vector<std::byte> encode_buffer(const MessageBuffer& buffer, unsigned width, std::size_t blocks = 1);
/// Throws CodecError on mixed types or a field that does not fit in w bytes.
std::vector<std::byte> encode_buffer(std::span<const Message> messages, unsigned width, std::size_t blocks = 1);

/// Throws CodecError on a truncated or garbled frame.
MessageBuffer decode_frame(std::span<const std::byte> bytes, unsigned width);
std::vector<Message> decode_buffer(std::span<const std::byte> bytes, unsigned width, Rank sender);

}  // namespace ccdist

#endif  // CCDIST_CODEC_HPP
