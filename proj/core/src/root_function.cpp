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

#include "ccdist/root_function.hpp"

namespace ccdist {

bool RootFunction::in_image(RootValue c, std::size_t n) const noexcept {
  if (kind_ == Kind::Identity) return c < n;
  if (hub_ >= n) return false;
  if (c == 0) return true;
  return c <= n && c != hub_ + 1;
}

VertexId RootFunction::checked_inverse(RootValue c, std::size_t n) const {
  if (!in_image(c, n))
    throw ProtocolError("root value " + std::to_string(c) + " is outside the image of " + describe() +
                        " over " + std::to_string(n) + " vertices");
  return inverse(c);
}

RootValue RootFunction::max_value(std::size_t n) const noexcept {
  if (n == 0) return 0;
  if (kind_ == Kind::Identity) return n - 1;
  // n - 1 maps to n unless it is the hub.
  return hub_ == n - 1 ? (n >= 2 ? n - 1 : 0) : n;
}

std::string RootFunction::describe() const {
  if (kind_ == Kind::Identity) return "identity";
  return "robin(hub=" + std::to_string(hub_) + ")";
}

}  // namespace ccdist
