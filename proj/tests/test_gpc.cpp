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

#include "ctsyn/gpc.hpp"

#include <stdexcept>

#include "ctsyn/library.hpp"
#include "doctest.h"

using ctsyn::Gpc;
using ctsyn::gpc_metrics;
using ctsyn::GpcMetrics;
using ctsyn::Rational;

TEST_CASE("rational arithmetic stays normalized") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(7, 4) - Rational(3, 4) == Rational(1, 1));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2, 1));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(Rational(1, 8).to_decimal(2) == "0.13");
  CHECK(Rational(1, 16).to_decimal(3) == "0.063");
  CHECK(Rational(7, 4).to_decimal(2) == "1.75");
  CHECK(Rational(12, 5).to_decimal(2) == "2.40");
  CHECK(Rational(0, 1).to_decimal(3) == "0.000");
  CHECK(Rational(8, 3).to_decimal(2) == "2.67");
  CHECK(Rational(150, 19).to_decimal(1) == "7.9");
}

TEST_CASE("canonical names write tuples most-significant first") {
  CHECK(ctsyn::gpc_name({3}, {1, 1}) == "C3:11");
  CHECK(ctsyn::gpc_name({5, 2}, {1, 2, 1}) == "C25:121");
  CHECK(ctsyn::gpc_name({6, 0}, {1, 1, 1}) == "C06:111");
  CHECK_THROWS_AS(ctsyn::gpc_name({10}, {1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("shape accessors") {
  Gpc g = ctsyn::make_gpc({5, 2}, {1, 2, 1}, 2);
  CHECK(g.name == "C25:121");
  CHECK(g.input_bits() == 7);
  CHECK(g.output_bits() == 4);
  CHECK(g.max_input_value() == 9);
  CHECK(g.max_output_value() == 9);
  CHECK_FALSE(g.is_wire());
}

namespace {

// One frozen row of the couple quality table: efficiency and strength at two
// decimals, arithmetic slack at three.
struct QualityRow {
  const char* name;
  const char* efficiency;
  const char* strength;
  const char* slack;
};

constexpr QualityRow kCoupleRows[] = {
    {"C0606:11111", "1.75", "2.40", "0.031"},
    {"C1415:11111", "1.50", "2.20", "0.000"},
    {"C2215:11111", "1.25", "2.00", "0.000"},
    {"C0615:11111", "1.75", "2.40", "0.000"},
    {"C1423:11111", "1.25", "2.00", "0.000"},
    {"C2223:11111", "1.00", "1.80", "0.000"},
    {"C0623:11111", "1.50", "2.20", "0.000"},
    {"C1406:11111", "1.50", "2.20", "0.031"},
    {"C2206:11111", "1.25", "2.00", "0.031"},
    {"C1325:11111", "1.50", "2.20", "0.063"},
    {"C06060606:111111111", "3.75", "2.67", "0.002"},
    {"C140606:1111111", "2.50", "2.43", "0.008"},
    {"C220606:1111111", "2.25", "2.29", "0.008"},
    {"C060606:1111111", "2.75", "2.57", "0.008"},
    {"C060615:1111111", "2.75", "2.57", "0.000"},
    {"C060623:1111111", "2.50", "2.43", "0.000"},
    {"C061406:1111111", "2.50", "2.43", "0.008"},
    {"C062206:1111111", "2.25", "2.29", "0.008"},
};

}  // namespace

TEST_CASE("couple quality figures") {
  std::vector<Gpc> couples;
  for (int w = 2; w <= 4; ++w) {
    for (const Gpc& g : ctsyn::compose_couples(w, true)) couples.push_back(g);
  }
  for (const QualityRow& row : kCoupleRows) {
    CAPTURE(row.name);
    const Gpc* g = nullptr;
    for (const Gpc& c : couples) {
      if (c.name == row.name) g = &c;
    }
    REQUIRE(g != nullptr);
    CHECK(g->cost == 4);
    GpcMetrics m = gpc_metrics(*g);
    CHECK(m.efficiency.to_decimal(2) == row.efficiency);
    CHECK(m.strength.to_decimal(2) == row.strength);
    CHECK(m.slack.to_decimal(3) == row.slack);
    CHECK_FALSE(m.apd.has_value());
  }
}

TEST_CASE("lut counter quality figures") {
  const Rational lut_delay(19, 50);
  struct LutRow {
    std::vector<int> inputs;
    int cost;
    const char* strength;
    const char* slack;
    const char* apd;
  };
  const LutRow rows[] = {
      {{6}, 3, "2.00", "0.13", "7.9"},
      {{5, 1}, 3, "2.00", "0.00", "7.9"},
      {{3, 2}, 2, "1.67", "0.00", "5.3"},
      {{5, 2}, 2, "1.75", "0.00", "11.8"},
  };
  for (const LutRow& row : rows) {
    std::vector<int> outputs =
        row.inputs == std::vector<int>{5, 2} ? std::vector<int>{1, 2, 1}
                                             : std::vector<int>{1, 1, 1};
    Gpc g = ctsyn::make_gpc(row.inputs, outputs, row.cost,
                            ctsyn::GpcKind::kLut, lut_delay);
    CAPTURE(g.name);
    GpcMetrics m = gpc_metrics(g);
    CHECK(m.strength.to_decimal(2) == row.strength);
    CHECK(m.slack.to_decimal(2) == row.slack);
    REQUIRE(m.apd.has_value());
    CHECK(m.apd->to_decimal(1) == row.apd);
  }
}

TEST_CASE("doubling the cost halves efficiency and apd only") {
  Gpc a = ctsyn::make_gpc({6}, {1, 1, 1}, 2, ctsyn::GpcKind::kLut,
                          Rational(19, 50));
  Gpc b = a;
  b.cost = 4;
  GpcMetrics ma = gpc_metrics(a);
  GpcMetrics mb = gpc_metrics(b);
  CHECK(ma.efficiency == mb.efficiency * Rational(2, 1));
  CHECK(*ma.apd == *mb.apd * Rational(2, 1));
  CHECK(ma.strength == mb.strength);
  CHECK(ma.slack == mb.slack);
}

TEST_CASE("metrics reject zero-cost shapes") {
  Gpc wire = ctsyn::make_gpc({1}, {1}, 0, ctsyn::GpcKind::kPseudoWire);
  CHECK(wire.is_wire());
  CHECK_THROWS_AS(gpc_metrics(wire), std::invalid_argument);
}

TEST_CASE("make_gpc validates shapes") {
  CHECK_THROWS_AS(ctsyn::make_gpc({}, {1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(ctsyn::make_gpc({3}, {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(ctsyn::make_gpc({-1}, {1}, 1), std::invalid_argument);
}
