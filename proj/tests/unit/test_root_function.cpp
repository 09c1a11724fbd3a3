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

#include "ccdist/robin.hpp"
#include "ccdist/root_function.hpp"
#include "doctest.h"

using namespace ccdist;

TEST_CASE("identity") {
  const auto f = RootFunction::identity();
  for (VertexId v = 0; v < 10; ++v) {
    CHECK(f.forward(v) == v);
    CHECK(f.inverse(v) == v);
  }
  CHECK(f.in_image(9, 10));
  CHECK_FALSE(f.in_image(10, 10));
  CHECK(f.max_value(10) == 9);
  CHECK(f.max_value(0) == 0);
  CHECK_THROWS_AS(f.checked_inverse(10, 10), ProtocolError);
  CHECK(f.describe() == "identity");
}

TEST_CASE("robin forward and inverse") {
  CHECK(robin_root(2, 2) == 0);
  CHECK(robin_root(7, 2) == 8);
  CHECK(robin_root_inv(0, 2) == 2);
  CHECK(robin_root_inv(8, 2) == 7);
  CHECK_THROWS_AS(robin_root_inv(3, 2), ProtocolError);
  for (VertexId md = 0; md < 6; ++md)
    for (VertexId v = 0; v < 6; ++v) CHECK(robin_root_inv(robin_root(v, md), md) == v);
}

TEST_CASE("robin is injective and its image is exactly [0, n] minus hub + 1") {
  for (std::size_t n = 1; n < 12; ++n) {
    for (VertexId hub = 0; hub < n; ++hub) {
      const auto f = RootFunction::robin(hub);
      std::vector<int> hits(n + 2, 0);
      for (VertexId v = 0; v < n; ++v) ++hits[f.forward(v)];
      RootValue max = 0;
      for (RootValue c = 0; c < n + 2; ++c) {
        CHECK(hits[c] <= 1);
        CHECK(f.in_image(c, n) == (hits[c] == 1));
        if (hits[c]) {
          max = c;
          CHECK(f.checked_inverse(c, n) == f.inverse(c));
        } else {
          CHECK_THROWS_AS(f.checked_inverse(c, n), ProtocolError);
        }
      }
      CHECK(f.max_value(n) == max);
    }
  }
}

TEST_CASE("robin hub outside the vertex range has an empty image") {
  CHECK_FALSE(RootFunction::robin(5).in_image(0, 3));
}
