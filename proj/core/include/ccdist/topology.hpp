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

#ifndef CCDIST_TOPOLOGY_HPP
#define CCDIST_TOPOLOGY_HPP

#include <optional>
#include <vector>

#include "ccdist/types.hpp"

namespace ccdist {

/**
 * Aggregation tree over machine ranks, rooted at rank 0.
 *
 * StarToReducer: every rank other than 0 reports straight to rank 0.
 * BinomialTree: parent(r) is r with its lowest set bit cleared, so rank 0
 * has children 1, 2, 4, ... and rank 4 has children 5, 6.
 */
class Topology {
 public:
  enum class Kind { StarToReducer, BinomialTree };

  Topology(Kind kind, Rank m);

  Kind kind() const noexcept { return kind_; }
  Rank size() const noexcept { return static_cast<Rank>(children_.size()); }

  std::optional<Rank> parent(Rank r) const;
  const std::vector<Rank>& children(Rank r) const { return children_.at(r); }
  bool is_leaf(Rank r) const { return children(r).empty(); }
  std::vector<Rank> leaves() const;

  /// Edges on the longest root-to-leaf path.
  unsigned height() const;
  /// Fan-out of the root; for a binomial tree this is the number of
  /// aggregation rounds, ceil(log2 m).
  unsigned order() const { return static_cast<unsigned>(children(0).size()); }

 private:
  Kind kind_;
  std::vector<std::optional<Rank>> parent_;
  std::vector<std::vector<Rank>> children_;
};

/// Throws DomainError when m == 0.
Topology build_topology(Topology::Kind kind, Rank m);

}  // namespace ccdist

#endif  // CCDIST_TOPOLOGY_HPP
