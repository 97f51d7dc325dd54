// Copyright 2026 The cfdyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cfdyn/cf_core.hpp"
#include "cfdyn/lemmas.hpp"
#include "cfdyn/numeric.hpp"
#include "doctest.h"

using namespace cfdyn;

namespace {

std::string detail(const BatteryResult& r, const std::string& key) {
  for (const auto& [k, v] : r.details)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_CASE("cylinder battery validates identities exhaustively") {
  BatteryResult r = battery_cylinder(4, 4);
  CHECK(r.pass);
  CHECK(r.failures == 0);
  // 4 + 16 + 64 + 256 words.
  CHECK(r.cases == 340);
}

TEST_CASE("drop-ratio battery covers every digit position") {
  BatteryResult r = battery_drop_ratio(4, 4);
  CHECK(r.pass);
  CHECK(r.failures == 0);
  // One case per (word, position): sum over len of len * 4^len.
  CHECK(r.cases == 4 * 1 + 16 * 2 + 64 * 3 + 256 * 4);
}

TEST_CASE("quasi-multiplicativity battery reports attained extremes") {
  BatteryResult r = battery_quasi_mult(3, 6);
  CHECK(r.pass);
  CHECK(r.failures == 0);
  CHECK(r.cases > 0);

  Rational lo = parse_fraction(detail(r, "min_ratio"));
  Rational hi = parse_fraction(detail(r, "max_ratio"));
  CHECK(lo >= Rational(1, 8));
  CHECK(hi <= 4);
  CHECK(lo < hi);
  CHECK(!detail(r, "min_u").empty());
  CHECK(!detail(r, "max_u").empty());
  // The reported witnesses attain the reported extremes.
  Word min_u = Word::parse(detail(r, "min_u"));
  Word min_v = Word::parse(detail(r, "min_v"));
  CHECK(quasi_mult_ratio(min_u, min_v) == lo);
  Word max_u = Word::parse(detail(r, "max_u"));
  Word max_v = Word::parse(detail(r, "max_v"));
  CHECK(quasi_mult_ratio(max_u, max_v) == hi);
}

TEST_CASE("gap battery certifies the distance floor") {
  BatteryResult r = battery_gap(2, 4);
  CHECK(r.pass);
  CHECK(r.failures == 0);
  CHECK(r.cases > 0);
}

TEST_CASE("schedule battery matches brute force") {
  BatteryResult r = battery_schedule(20'000);
  CHECK(r.pass);
  CHECK(r.failures == 0);
  CHECK(r.cases >= 20'000);
}

TEST_CASE("self-check bundles every battery") {
  auto all = self_check();
  REQUIRE(all.size() == 5);
  for (const auto& r : all) {
    CAPTURE(r.name);
    CHECK(r.pass);
    CHECK(r.failures == 0);
    CHECK(!r.name.empty());
  }
}
