// Copyright 2026 The ctsyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctsyn/bitheap.hpp"

#include <set>
#include <stdexcept>

#include "doctest.h"

using ctsyn::BitAssignment;
using ctsyn::BitHeap;

TEST_CASE("literal round trip keeps most-significant-first order") {
  BitHeap h = BitHeap::from_msb_literal("6,0,6");
  CHECK(h.columns() == std::vector<int>{6, 0, 6});
  CHECK(h.to_msb_literal() == "6,0,6");
  CHECK(BitHeap::from_msb_literal("0,6,0,6").normalized().to_msb_literal() ==
        "6,0,6");
  CHECK(BitHeap({3}).to_msb_literal() == "3");
}

TEST_CASE("max value is the all-ones weighted sum") {
  CHECK(BitHeap({6}).max_value() == 6);
  CHECK(BitHeap::from_msb_literal("6,0,6").max_value() == 30);
  // Inputs of the width-2 couple extended with the mixed slice pattern.
  CHECK(BitHeap::from_msb_literal("1,3,2,5").max_value() == 29);
  CHECK(BitHeap().max_value() == 0);
}

TEST_CASE("bit width") {
  CHECK(ctsyn::bit_width(0) == 0);
  CHECK(ctsyn::bit_width(1) == 1);
  CHECK(ctsyn::bit_width(4) == 3);
  CHECK(ctsyn::bit_width(6) == 3);
  CHECK(ctsyn::bit_width(30) == 5);
}

TEST_CASE("plus merges per column") {
  BitHeap a({1, 1});
  BitHeap b({2});
  CHECK(a.plus(b).columns() == std::vector<int>{3, 1});
  CHECK(b.plus(a).columns() == std::vector<int>{3, 1});
}

TEST_CASE("height outside the stored range is zero") {
  BitHeap h({2, 1});
  CHECK(h.height(0) == 2);
  CHECK(h.height(1) == 1);
  CHECK(h.height(5) == 0);
  CHECK(h.total_bits() == 3);
}

TEST_CASE("construction caps") {
  CHECK_THROWS_AS(BitHeap({-1}), std::invalid_argument);
  CHECK_THROWS_AS(BitHeap(std::vector<int>(49, 1)), std::invalid_argument);
  CHECK_THROWS_AS(BitHeap({4097}), std::invalid_argument);
  CHECK_NOTHROW(BitHeap(std::vector<int>(48, 1)));
  CHECK_THROWS_AS(BitHeap::from_msb_literal("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(BitHeap::from_msb_literal("x"), std::invalid_argument);
}

TEST_CASE("dot rendering distinguishes distinct heaps") {
  std::set<std::string> seen;
  seen.insert(ctsyn::render_dots(BitHeap({2, 1})));
  seen.insert(ctsyn::render_dots(BitHeap({1, 2})));
  seen.insert(ctsyn::render_dots(BitHeap({3})));
  seen.insert(ctsyn::render_dots(BitHeap({1, 1, 1})));
  CHECK(seen.size() == 4);
}

TEST_CASE("assignment values") {
  BitHeap h({2, 1});
  BitAssignment a = BitAssignment::zeros(h);
  CHECK(ctsyn::assignment_value(h, a) == 0);
  a.bits[0][1] = 1;
  a.bits[1][0] = 1;
  CHECK(ctsyn::assignment_value(h, a) == 3);
  BitAssignment wrong;
  wrong.bits = {{1}};
  CHECK_THROWS_AS(ctsyn::assignment_value(h, wrong), std::invalid_argument);
}
