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

#include "ccdist/parent_array.hpp"

#include <algorithm>

namespace ccdist {

ParentArray::ParentArray(std::size_t n, const RootFunction& f, Options options) : size_(n) {
  const auto top = f.max_value(n);
  const bool fits_narrow = top <= UINT32_MAX;
  switch (options.width) {
    case Width::Auto: wide_ = !fits_narrow; break;
    case Width::Wide: wide_ = true; break;
    case Width::Narrow:
      if (!fits_narrow)
        throw DomainError("root values of " + f.describe() + " exceed 4-byte slots");
      wide_ = false;
      break;
  }
  if (wide_) {
    wide_slots_ = std::make_unique<std::atomic<std::uint64_t>[]>(n);
    for (VertexId v = 0; v < n; ++v) wide_slots_[v].store(f.forward(v), std::memory_order_relaxed);
  } else {
    narrow_slots_ = std::make_unique<std::atomic<std::uint32_t>[]>(n);
    for (VertexId v = 0; v < n; ++v)
      narrow_slots_[v].store(static_cast<std::uint32_t>(f.forward(v)), std::memory_order_relaxed);
  }
  if (options.track_updates) {
    updates_ = std::make_unique<std::atomic<std::uint32_t>[]>(n);
    for (VertexId v = 0; v < n; ++v) updates_[v].store(0, std::memory_order_relaxed);
  }
  std::atomic_thread_fence(std::memory_order_release);
}

bool ParentArray::compare_exchange(VertexId v, RootValue expected, RootValue desired) noexcept {
  bool ok;
  if (wide_) {
    ok = wide_slots_[v].compare_exchange_strong(expected, desired, std::memory_order_acq_rel,
                                                std::memory_order_acquire);
  } else {
    auto narrow_expected = static_cast<std::uint32_t>(expected);
    ok = narrow_slots_[v].compare_exchange_strong(narrow_expected, static_cast<std::uint32_t>(desired),
                                                  std::memory_order_acq_rel, std::memory_order_acquire);
  }
  if (ok && updates_) updates_[v].fetch_add(1, std::memory_order_relaxed);
  return ok;
}

std::uint32_t ParentArray::updates(VertexId v) const noexcept {
  return updates_ ? updates_[v].load(std::memory_order_relaxed) : 0;
}

std::uint32_t ParentArray::max_updates() const noexcept {
  std::uint32_t best = 0;
  if (!updates_) return best;
  for (VertexId v = 0; v < size_; ++v) best = std::max(best, updates_[v].load(std::memory_order_relaxed));
  return best;
}

void ParentArray::reset_update_counts() noexcept {
  if (!updates_) return;
  for (VertexId v = 0; v < size_; ++v) updates_[v].store(0, std::memory_order_relaxed);
}

std::vector<RootValue> ParentArray::snapshot() const {
  std::vector<RootValue> out(size_);
  for (VertexId v = 0; v < size_; ++v) out[v] = load(v);
  return out;
}

}  // namespace ccdist
