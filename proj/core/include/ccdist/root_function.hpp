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

#ifndef CCDIST_ROOT_FUNCTION_HPP
#define CCDIST_ROOT_FUNCTION_HPP

#include <string>

#include "ccdist/types.hpp"

namespace ccdist {

/**
 * Injective map from vertices to root values, with its inverse.
 *
 * Identity roots every component at its lowest vertex ID. Robin plants
 * root value 0 on a chosen hub vertex and shifts every other vertex up by
 * one, so the hub's component converges to 0 and the rest are ordered by
 * their lowest ID:
 *
 *     forward(v) = 0 if v == hub, v + 1 otherwise
 *     inverse(c) = hub if c == 0, c - 1 otherwise
 *
 * The value hub + 1 is outside the image of the Robin map.
 */
class RootFunction {
 public:
  enum class Kind { Identity, Robin };

  static RootFunction identity() noexcept { return RootFunction(Kind::Identity, 0); }
  static RootFunction robin(VertexId hub) noexcept { return RootFunction(Kind::Robin, hub); }

  Kind kind() const noexcept { return kind_; }
  /// Hub of the Robin map; meaningless for identity.
  VertexId hub() const noexcept { return hub_; }

  RootValue forward(VertexId v) const noexcept {
    if (kind_ == Kind::Identity) return v;
    return v == hub_ ? 0 : v + 1;
  }
  /// Unchecked inverse; \p c must lie in the image.
  VertexId inverse(RootValue c) const noexcept {
    if (kind_ == Kind::Identity) return c;
    return c == 0 ? hub_ : c - 1;
  }

  /// Whether c = forward(v) for some v < n.
  bool in_image(RootValue c, std::size_t n) const noexcept;
  /// Checked inverse over [0, n); throws ProtocolError outside the image.
  VertexId checked_inverse(RootValue c, std::size_t n) const;
  /// Largest root value produced over [0, n); 0 when n == 0.
  RootValue max_value(std::size_t n) const noexcept;

  std::string describe() const;

  friend bool operator==(const RootFunction&, const RootFunction&) = default;

 private:
  RootFunction(Kind kind, VertexId hub) noexcept : kind_(kind), hub_(hub) {}

  Kind kind_;
  VertexId hub_;
};

}  // namespace ccdist

#endif  // CCDIST_ROOT_FUNCTION_HPP
