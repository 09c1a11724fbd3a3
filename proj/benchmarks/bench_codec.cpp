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

#include <benchmark/benchmark.h>

#include <random>

#include "ccdist/codec.hpp"

namespace {

using namespace ccdist;

MessageBuffer pairs(std::size_t count, unsigned width) {
  std::mt19937_64 rng(3);
  const auto max = width == 8 ? ~std::uint64_t{0} : (std::uint64_t{1} << (8 * width)) - 1;
  std::uniform_int_distribution<std::uint64_t> value(0, max);
  MessageBuffer b;
  b.type = MessageType::ParentPair;
  for (std::size_t i = 0; i < count; ++i) b.add_parent_pair(value(rng), value(rng));
  return b;
}

void BM_Encode(benchmark::State& state) {
  const auto w = static_cast<unsigned>(state.range(0));
  const auto b = pairs(65536, w);
  for (auto _ : state) benchmark::DoNotOptimize(encode_buffer(b, w, 64));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(b.record_count * 2 * w));
}
BENCHMARK(BM_Encode)->DenseRange(1, 8, 1);

void BM_Decode(benchmark::State& state) {
  const auto w = static_cast<unsigned>(state.range(0));
  const auto frame = encode_buffer(pairs(65536, w), w, 64);
  for (auto _ : state) benchmark::DoNotOptimize(decode_frame(frame, w));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(frame.size()));
}
BENCHMARK(BM_Decode)->DenseRange(1, 8, 1);

}  // namespace
