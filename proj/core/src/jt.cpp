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

#include "ccdist/jt.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "parallel.hpp"

namespace ccdist::jt {

HookOutcome hook_edge(ParentArray& parents, VertexId u, VertexId v, const RootFunction& f) noexcept {
  if (u == v) return HookOutcome::same();
  for (;;) {
    const auto ru = find_root(parents, u, f);
    const auto rv = find_root(parents, v, f);
    if (ru.vertex == rv.vertex) return HookOutcome::same();
    if (ru.value < rv.value) {
      if (parents.compare_exchange(rv.vertex, rv.value, ru.value)) return HookOutcome::hooked(rv.vertex, ru.value);
    } else {
      if (parents.compare_exchange(ru.vertex, ru.value, rv.value)) return HookOutcome::hooked(ru.vertex, rv.value);
    }
    // Restart from the stale roots; they still lead to the current ones.
    u = ru.vertex;
    v = rv.vertex;
  }
}

void pointer_jump_range(ParentArray& parents, const RootFunction& f, VertexId begin, VertexId end) noexcept {
  for (VertexId v = begin; v < end; ++v) parents.store(v, find_root(parents, v, f).value);
}

void pointer_jump_all(ParentArray& parents, const RootFunction& f, std::size_t workers) {
  detail::parallel_for(workers, parents.size(), [&](std::size_t, std::size_t b, std::size_t e) {
    pointer_jump_range(parents, f, b, e);
  });
}

ParentArray run_cc_shared_parents(const Graph& graph, const RootFunction& f, std::size_t workers,
                                  ParentArray::Options options) {
  if (workers == 0) throw DomainError("workers must be at least 1");
  const auto n = graph.vertex_count();
  ParentArray parents(n, f, options);
  if (n == 0) return parents;

  // Workers claim edge-balanced vertex ranges in index order.
  const auto pm = partition_edge_balanced(graph, workers * 4);
  std::atomic<std::size_t> next{0};
  auto hook_partitions = [&] {
    for (;;) {
      const auto p = next.fetch_add(1, std::memory_order_relaxed);
      if (p >= pm.partition_count()) return;
      for (VertexId u = pm.boundaries[p]; u < pm.boundaries[p + 1]; ++u)
        for (const auto v : graph.neighbors(u)) hook_edge(parents, u, v, f);
    }
  };
  if (workers == 1) {
    hook_partitions();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) threads.emplace_back(hook_partitions);
  }
  pointer_jump_all(parents, f, workers);
  return parents;
}

std::vector<RootValue> run_cc_shared(const Graph& graph, const RootFunction& f, std::size_t workers,
                                     ParentArray::Options options) {
  return run_cc_shared_parents(graph, f, workers, options).snapshot();
}

}  // namespace ccdist::jt
