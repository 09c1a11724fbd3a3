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

#ifndef CCDIST_SRC_PARALLEL_HPP
#define CCDIST_SRC_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ccdist::detail {

// Small ranges stay on the calling thread.
inline constexpr std::size_t kMinParallelGrain = 4096;

/// Splits [0, n) into at most \p workers contiguous slices; fn(tid, begin, end).
template <typename Fn>
void parallel_for(std::size_t workers, std::size_t n, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n / kMinParallelGrain));
  if (workers == 1) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      threads.emplace_back([&, t] {
        try {
          fn(t, n * t / workers, n * (t + 1) / workers);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ccdist::detail

#endif  // CCDIST_SRC_PARALLEL_HPP
