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

#ifndef CCDIST_PARENT_ARRAY_HPP
#define CCDIST_PARENT_ARRAY_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "ccdist/root_function.hpp"
#include "ccdist/types.hpp"

namespace ccdist {

/**
 * One atomic root-value slot per vertex.
 *
 * Slots are 4 bytes wide when every root value fits (n < 2^32 in practice)
 * and 8 bytes otherwise. Loads are acquire, successful compare-and-swaps
 * are acq_rel; a stale load only costs the caller another trip around its
 * retry loop.
 *
 * With update tracking enabled every successful compare_exchange bumps a
 * per-slot counter, which is how the at-most-once property is audited.
 */
class ParentArray {
 public:
  enum class Width { Auto, Narrow, Wide };

  struct Options {
    Width width = Width::Auto;
    bool track_updates = false;
  };

  ParentArray() = default;
  /// Initializes slot v to f(v); every vertex starts as a root.
  ParentArray(std::size_t n, const RootFunction& f) : ParentArray(n, f, Options{}) {}
  ParentArray(std::size_t n, const RootFunction& f, Options options);

  ParentArray(ParentArray&&) noexcept = default;
  ParentArray& operator=(ParentArray&&) noexcept = default;

  std::size_t size() const noexcept { return size_; }
  unsigned slot_bytes() const noexcept { return wide_ ? 8u : 4u; }

  RootValue load(VertexId v) const noexcept {
    return wide_ ? wide_slots_[v].load(std::memory_order_acquire)
                 : narrow_slots_[v].load(std::memory_order_acquire);
  }

  /// Plain store for pointer jumping; must not race with hooking.
  void store(VertexId v, RootValue value) noexcept {
    if (wide_) {
      wide_slots_[v].store(value, std::memory_order_release);
    } else {
      narrow_slots_[v].store(static_cast<std::uint32_t>(value), std::memory_order_release);
    }
  }

  bool compare_exchange(VertexId v, RootValue expected, RootValue desired) noexcept;

  bool tracking_updates() const noexcept { return static_cast<bool>(updates_); }
  /// Successful compare_exchange calls on slot v since construction or reset.
  std::uint32_t updates(VertexId v) const noexcept;
  std::uint32_t max_updates() const noexcept;
  void reset_update_counts() noexcept;

  std::vector<RootValue> snapshot() const;

 private:
  std::size_t size_ = 0;
  bool wide_ = false;
  std::unique_ptr<std::atomic<std::uint32_t>[]> narrow_slots_;
  std::unique_ptr<std::atomic<std::uint64_t>[]> wide_slots_;
  std::unique_ptr<std::atomic<std::uint32_t>[]> updates_;
};

}  // namespace ccdist

#endif  // CCDIST_PARENT_ARRAY_HPP
