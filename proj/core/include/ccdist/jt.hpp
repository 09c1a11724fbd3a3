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

#ifndef CCDIST_JT_HPP
#define CCDIST_JT_HPP

#include <cstddef>
#include <vector>

#include "ccdist/graph.hpp"
#include "ccdist/parent_array.hpp"
#include "ccdist/root_function.hpp"

namespace ccdist::jt {

struct RootRef {
  VertexId vertex = 0;
  RootValue value = 0;

  friend bool operator==(const RootRef&, const RootRef&) = default;
};

struct HookOutcome {
  enum class Kind { AlreadySame, Hooked };

  Kind kind = Kind::AlreadySame;
  /// Root whose slot was overwritten (Hooked only).
  VertexId loser_root = 0;
  /// Value written into the loser's slot (Hooked only).
  RootValue winner_value = 0;

  bool hooked() const noexcept { return kind == Kind::Hooked; }

  static HookOutcome same() noexcept { return {}; }
  static HookOutcome hooked(VertexId loser, RootValue winner) noexcept {
    return {Kind::Hooked, loser, winner};
  }
  friend bool operator==(const HookOutcome&, const HookOutcome&) = default;
};

/// Follows v -> f^-1(P[v]) until reaching a vertex u with P[u] == f(u).
inline RootRef find_root(const ParentArray& parents, VertexId v, const RootFunction& f) noexcept {
  for (;;) {
    const RootValue value = parents.load(v);
    if (value == f.forward(v)) return {v, value};
    v = f.inverse(value);
  }
}

/**
 * Merges the trees of u and v.
 *
 * The root with the greater f-value is compare-and-swapped from its own
 * value to the other root's value. A failed swap means another worker
 * moved one of the roots, so the roots are looked up again. Lock-free and
 * safe to call concurrently on a shared ParentArray.
 */
HookOutcome hook_edge(ParentArray& parents, VertexId u, VertexId v, const RootFunction& f) noexcept;

/// Rewrites slots [begin, end) with their component's root value.
void pointer_jump_range(ParentArray& parents, const RootFunction& f, VertexId begin, VertexId end) noexcept;

/// Single pass over every slot; idempotent. Must not overlap with hooking.
void pointer_jump_all(ParentArray& parents, const RootFunction& f, std::size_t workers = 1);

/**
 * Shared-memory connected components.
 *
 * Hooks every stored edge once across \p workers threads, then pointer
 * jumps. labels[v] is the smallest f-value in v's component.
 */
std::vector<RootValue> run_cc_shared(const Graph& graph, const RootFunction& f, std::size_t workers,
                                     ParentArray::Options options = {});

/// Same as run_cc_shared but hands back the ParentArray (for update audits).
ParentArray run_cc_shared_parents(const Graph& graph, const RootFunction& f, std::size_t workers,
                                  ParentArray::Options options = {});

}  // namespace ccdist::jt

#endif  // CCDIST_JT_HPP
