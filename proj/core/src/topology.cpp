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

#include "ccdist/topology.hpp"

#include <algorithm>

namespace ccdist {

Topology::Topology(Kind kind, Rank m) : kind_(kind), parent_(m), children_(m) {
  if (m == 0) throw DomainError("topology needs at least one machine");
  for (Rank r = 1; r < m; ++r) {
    const Rank p = kind == Kind::StarToReducer ? 0 : (r & (r - 1));
    parent_[r] = p;
    children_[p].push_back(r);
  }
  // Binomial children come out in ascending order already: r + 1, r + 2, r + 4, ...
}

std::optional<Rank> Topology::parent(Rank r) const { return parent_.at(r); }

std::vector<Rank> Topology::leaves() const {
  std::vector<Rank> out;
  for (Rank r = 0; r < size(); ++r)
    if (children_[r].empty()) out.push_back(r);
  return out;
}

unsigned Topology::height() const {
  unsigned best = 0;
  for (Rank r = 0; r < size(); ++r) {
    unsigned depth = 0;
    for (auto p = parent_[r]; p; p = parent_[*p]) ++depth;
    best = std::max(best, depth);
  }
  return best;
}

Topology build_topology(Topology::Kind kind, Rank m) { return Topology(kind, m); }

}  // namespace ccdist
