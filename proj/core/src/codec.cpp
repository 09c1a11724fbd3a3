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

#include "ccdist/codec.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ccdist {

namespace {

void check_width(unsigned width) {
  if (width < 1 || width > 8) throw CodecError("id width must be 1..8, got " + std::to_string(width));
}

void put_le(std::vector<std::byte>& out, std::uint64_t value, unsigned width) {
  for (unsigned i = 0; i < width; ++i) out.push_back(static_cast<std::byte>((value >> (8 * i)) & 0xff));
}

std::uint64_t get_le(std::span<const std::byte> bytes, std::size_t pos, unsigned width) {
  std::uint64_t value = 0;
  for (unsigned i = 0; i < width; ++i) value |= std::to_integer<std::uint64_t>(bytes[pos + i]) << (8 * i);
  return value;
}

std::size_t fields_per_record(MessageType type) noexcept {
  switch (type) {
    case MessageType::ZeroConverged: return 1;
    case MessageType::ParentPair: return 2;
    case MessageType::Done: return 0;
  }
  return 0;
}

}  // namespace

std::string_view to_string(MessageType type) {
  switch (type) {
    case MessageType::ZeroConverged: return "zero_converged";
    case MessageType::ParentPair: return "parent_pair";
    case MessageType::Done: return "done";
  }
  return "unknown";
}

MessageType type_of(const Message& m) noexcept {
  return std::visit(
      [](const auto& msg) {
        using T = std::decay_t<decltype(msg)>;
        if constexpr (std::is_same_v<T, ZeroConverged>) return MessageType::ZeroConverged;
        else if constexpr (std::is_same_v<T, ParentPair>) return MessageType::ParentPair;
        else return MessageType::Done;
      },
      m);
}

unsigned id_byte_width(std::size_t n) {
  if (n == 0) throw DomainError("id_byte_width needs n >= 1");
  // ceil(log2 n) bits, then whole bytes.
  const auto bits = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(n - 1)));
  return std::max(1u, (bits + 7) / 8);
}

std::size_t record_bytes(MessageType type, unsigned width) noexcept {
  return fields_per_record(type) * width;
}

std::pair<std::size_t, std::size_t> MessageBuffer::block(std::size_t b) const noexcept {
  return {record_count * b / block_count, record_count * (b + 1) / block_count};
}

std::vector<Message> MessageBuffer::messages(Rank sender) const {
  std::vector<Message> out;
  out.reserve(record_count);
  for (std::size_t i = 0; i < record_count; ++i) {
    switch (type) {
      case MessageType::ZeroConverged: out.emplace_back(ZeroConverged{fields[i]}); break;
      case MessageType::ParentPair: out.emplace_back(ParentPair{fields[2 * i], fields[2 * i + 1]}); break;
      case MessageType::Done: out.emplace_back(Done{sender}); break;
    }
  }
  return out;
}

std::uint16_t blocks_for(std::size_t records, std::size_t configured_blocks) noexcept {
  if (records == 0) return 0;
  return static_cast<std::uint16_t>(std::clamp<std::size_t>(configured_blocks, 1, std::min(records, kMaxBlocks)));
}

std::vector<std::byte> encode_buffer(const MessageBuffer& buffer, unsigned width, std::size_t blocks) {
  check_width(width);
  if (buffer.record_count > UINT32_MAX) throw CodecError("too many records for one frame");
  if (buffer.fields.size() != buffer.record_count * fields_per_record(buffer.type))
    throw CodecError("buffer fields do not match its record count");
  const std::uint64_t limit_bits = 8ull * width;
  for (const auto value : buffer.fields)
    if (limit_bits < 64 && (value >> limit_bits) != 0)
      throw CodecError("value " + std::to_string(value) + " does not fit in " + std::to_string(width) + " bytes");

  std::vector<std::byte> out;
  out.reserve(kFrameHeaderBytes + buffer.fields.size() * width);
  out.push_back(static_cast<std::byte>(buffer.type));
  put_le(out, buffer.record_count, 4);
  put_le(out, blocks_for(buffer.record_count, blocks), 2);
  for (const auto value : buffer.fields) put_le(out, value, width);
  return out;
}

std::vector<std::byte> encode_buffer(std::span<const Message> messages, unsigned width, std::size_t blocks) {
  if (messages.empty()) throw CodecError("cannot infer the type of an empty message run");
  MessageBuffer buffer;
  buffer.type = type_of(messages.front());
  for (const auto& m : messages) {
    if (type_of(m) != buffer.type) throw CodecError("message run mixes record types");
    std::visit(
        [&](const auto& msg) {
          using T = std::decay_t<decltype(msg)>;
          if constexpr (std::is_same_v<T, ZeroConverged>) buffer.add_zero_converged(msg.vertex);
          else if constexpr (std::is_same_v<T, ParentPair>) buffer.add_parent_pair(msg.child, msg.parent_value);
          else buffer.add_done();
        },
        m);
  }
  return encode_buffer(buffer, width, blocks);
}

MessageBuffer decode_frame(std::span<const std::byte> bytes, unsigned width) {
  check_width(width);
  if (bytes.size() < kFrameHeaderBytes) throw CodecError("frame shorter than its header");
  const auto tag = std::to_integer<std::uint8_t>(bytes[0]);
  if (tag < 1 || tag > kMessageTypeCount) throw CodecError("unknown record type tag " + std::to_string(tag));
  MessageBuffer buffer;
  buffer.type = static_cast<MessageType>(tag);
  buffer.record_count = get_le(bytes, 1, 4);
  buffer.block_count = static_cast<std::uint16_t>(get_le(bytes, 5, 2));
  if ((buffer.record_count == 0) != (buffer.block_count == 0) || buffer.block_count > buffer.record_count)
    throw CodecError("block count " + std::to_string(buffer.block_count) + " inconsistent with " +
                     std::to_string(buffer.record_count) + " records");
  const auto per = fields_per_record(buffer.type);
  const auto payload = bytes.size() - kFrameHeaderBytes;
  if (payload != buffer.record_count * per * width)
    throw CodecError("frame payload is " + std::to_string(payload) + " bytes, expected " +
                     std::to_string(buffer.record_count * per * width));
  buffer.fields.resize(buffer.record_count * per);
  for (std::size_t i = 0; i < buffer.fields.size(); ++i)
    buffer.fields[i] = get_le(bytes, kFrameHeaderBytes + i * width, width);
  return buffer;
}

std::vector<Message> decode_buffer(std::span<const std::byte> bytes, unsigned width, Rank sender) {
  return decode_frame(bytes, width).messages(sender);
}

}  // namespace ccdist
