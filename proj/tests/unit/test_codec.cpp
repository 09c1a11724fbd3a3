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

#include <random>

#include "ccdist/codec.hpp"
#include "doctest.h"

using namespace ccdist;

namespace {

std::vector<int> payload(const std::vector<std::byte>& frame) {
  std::vector<int> out;
  for (std::size_t i = kFrameHeaderBytes; i < frame.size(); ++i) out.push_back(std::to_integer<int>(frame[i]));
  return out;
}

}  // namespace

TEST_CASE("id_byte_width") {
  CHECK(id_byte_width(std::size_t{1} << 32) == 4);
  CHECK(id_byte_width((std::size_t{1} << 32) + 1) == 5);
  CHECK(id_byte_width(300) == 2);
  CHECK(id_byte_width(256) == 1);
  CHECK(id_byte_width(257) == 2);
  CHECK(id_byte_width(1) == 1);
  CHECK(id_byte_width(2) == 1);
  CHECK_THROWS_AS(id_byte_width(0), DomainError);
}

TEST_CASE("encode examples") {
  const std::vector<Message> zero{ZeroConverged{5}};
  const auto a = encode_buffer(zero, 1);
  CHECK(payload(a) == std::vector<int>{0x05});
  CHECK(std::to_integer<int>(a[0]) == 1);
  CHECK(std::to_integer<int>(a[1]) == 1);
  CHECK(std::to_integer<int>(a[5]) == 1);

  const std::vector<Message> pair{ParentPair{3, 0}};
  const auto b = encode_buffer(pair, 2);
  CHECK(payload(b) == std::vector<int>{0x03, 0x00, 0x00, 0x00});
  CHECK(std::to_integer<int>(b[0]) == 2);

  const std::vector<Message> done{Done{4}};
  const auto c = encode_buffer(done, 3);
  CHECK(c.size() == kFrameHeaderBytes);
  CHECK(std::to_integer<int>(c[0]) == 3);

  CHECK(decode_buffer(a, 1, 0) == zero);
  CHECK(decode_buffer(b, 2, 0) == pair);
  CHECK(decode_buffer(c, 3, 4) == done);
}

TEST_CASE("record lengths") {
  for (unsigned w = 1; w <= 8; ++w) {
    CHECK(record_bytes(MessageType::ZeroConverged, w) == w);
    CHECK(record_bytes(MessageType::ParentPair, w) == 2 * w);
    CHECK(record_bytes(MessageType::Done, w) == 0);
  }
}

TEST_CASE("random round trips for every width") {
  std::mt19937_64 rng(1);
  for (unsigned w = 1; w <= 8; ++w) {
    const auto max = w == 8 ? ~std::uint64_t{0} : (std::uint64_t{1} << (8 * w)) - 1;
    std::uniform_int_distribution<std::uint64_t> value(0, max);
    std::vector<Message> zero;
    std::vector<Message> pairs;
    for (int i = 0; i < 10000; ++i) {
      zero.push_back(ZeroConverged{value(rng)});
      pairs.push_back(ParentPair{value(rng), value(rng)});
    }
    for (std::size_t blocks : {1, 7, 1024}) {
      const auto zf = encode_buffer(zero, w, blocks);
      const auto pf = encode_buffer(pairs, w, blocks);
      CHECK(zf.size() == kFrameHeaderBytes + zero.size() * w);
      CHECK(pf.size() == kFrameHeaderBytes + pairs.size() * 2 * w);
      CHECK(decode_buffer(zf, w, 0) == zero);
      CHECK(decode_buffer(pf, w, 0) == pairs);
      CHECK(decode_frame(pf, w).block_count == blocks);
    }
  }
}

TEST_CASE("encode rejects bad input") {
  const std::vector<Message> big{ZeroConverged{256}};
  CHECK_THROWS_AS(encode_buffer(big, 1), CodecError);
  const std::vector<Message> mixed{ZeroConverged{1}, ParentPair{1, 2}};
  CHECK_THROWS_AS(encode_buffer(mixed, 1), CodecError);
  CHECK_THROWS_AS(encode_buffer(std::vector<Message>{}, 1), CodecError);
  const std::vector<Message> ok{ZeroConverged{1}};
  CHECK_THROWS_AS(encode_buffer(ok, 0), CodecError);
  CHECK_THROWS_AS(encode_buffer(ok, 9), CodecError);
}

TEST_CASE("decode rejects damaged frames") {
  const std::vector<Message> pairs{ParentPair{1, 2}, ParentPair{3, 4}};
  const auto frame = encode_buffer(pairs, 2, 2);
  for (std::size_t len = 0; len < frame.size(); ++len)
    CHECK_THROWS_AS(decode_frame(std::span(frame).first(len), 2), CodecError);
  auto extra = frame;
  extra.push_back(std::byte{0});
  CHECK_THROWS_AS(decode_frame(extra, 2), CodecError);
  auto tag = frame;
  tag[0] = std::byte{9};
  CHECK_THROWS_AS(decode_frame(tag, 2), CodecError);
  auto blocks = frame;
  blocks[5] = std::byte{3};
  CHECK_THROWS_AS(decode_frame(blocks, 2), CodecError);
  auto no_blocks = frame;
  no_blocks[5] = std::byte{0};
  CHECK_THROWS_AS(decode_frame(no_blocks, 2), CodecError);
}

TEST_CASE("block_count rule") {
  CHECK(blocks_for(0, 64) == 0);
  CHECK(blocks_for(5, 64) == 5);
  CHECK(blocks_for(100, 64) == 64);
  CHECK(blocks_for(100, 0) == 1);
  CHECK(blocks_for(1'000'000, 1'000'000) == 65535);
}

TEST_CASE("blocks partition the records") {
  MessageBuffer b;
  b.type = MessageType::ZeroConverged;
  for (VertexId v = 0; v < 10; ++v) b.add_zero_converged(v);
  b.block_count = 3;
  std::size_t expected_begin = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [begin, end] = b.block(i);
    CHECK(begin == expected_begin);
    CHECK(end - begin >= 3);
    CHECK(end - begin <= 4);
    expected_begin = end;
  }
  CHECK(expected_begin == 10);
}
