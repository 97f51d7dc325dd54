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

#include "cfdyn/scramble.hpp"
#include "doctest.h"

using namespace cfdyn;

TEST_CASE("orbit enclosures box the shifted tail") {
  SeedSpec spec = SeedSpec::parse(3, "2;2");
  OrbitEnclosure enc = orbit_enclosure(spec.stream, 1, 4);
  CHECK(enc.box.word == (Word{3, 2, 2, 2}));
  CHECK(enc.shift == 1);
  CHECK(enc.depth == 4);

  // Deeper enclosures nest.
  OrbitEnclosure deeper = orbit_enclosure(spec.stream, 1, 9);
  CHECK(enc.box.interval().contains(deeper.box.interval()));
}

TEST_CASE("bounded hull tightens and contains the bounded continuations") {
  // Points of I(2) with all later digits <= 2 stay well inside [1/3, 1/2).
  Word w{2};
  Interval h8 = bounded_hull(w, 2, 8);
  Interval h16 = bounded_hull(w, 2, 16);
  CHECK(h8.contains(h16));
  Interval cyl = cylinder_of(w).interval();
  CHECK(cyl.contains(h8));

  // The two extreme periodic continuations are inside any hull level:
  // [2,1,2,1,...] and [2,2,2,...] evaluated at a deep truncation.
  std::vector<std::int64_t> alt{2}, twos{2};
  for (int i = 0; i < 30; ++i) {
    alt.push_back(i % 2 == 0 ? 1 : 2);
    twos.push_back(2);
  }
  CHECK(h8.contains(cf_value(Word(std::move(alt)))));
  CHECK(h8.contains(cf_value(Word(std::move(twos)))));

  // Digits beyond the bound escape the hull once it is tight enough.
  CHECK(!h16.contains(cf_value(Word{2, 7, 1, 1, 1, 1, 5})));
}

TEST_CASE("separation witnesses certify positive distances") {
  SeedSpec a = SeedSpec::parse(2, "1;1");
  SeedSpec b = SeedSpec::parse(2, "2;2");
  Rational min_gap = Rational(1, 8) * Rational(1, 12) * Rational(1, 12);
  std::vector<std::string> notes;
  auto seps = separation_witnesses(a, b, 512, 5, min_gap, 64, &notes);
  REQUIRE(seps.size() >= 5);
  for (const auto& s : seps) {
    CHECK(s.gap >= min_gap);
    // Recompute the enclosures at the reported depth: the certified gap is
    // a true lower bound for the distance of the boxed tails.
    OrbitEnclosure ea = orbit_enclosure(a.stream, s.shift, s.depth);
    OrbitEnclosure eb = orbit_enclosure(b.stream, s.shift, s.depth);
    CHECK(signed_gap(ea.box.interval(), eb.box.interval()) == s.gap);
  }
}

TEST_CASE("proximity witnesses reach every level with shrinking gaps") {
  SeedSpec a = SeedSpec::parse(2, "1;1");
  SeedSpec b = SeedSpec::parse(2, "2;2");
  ScrambleConfig cfg;
  cfg.j_max = 8;
  std::vector<std::string> notes;
  auto prox = proximity_witnesses(a, b, cfg, &notes);
  REQUIRE(prox.size() == 8);
  Rational prev = 1;
  for (const auto& p : prox) {
    CHECK(p.common >= p.level);
    // |I(w)| <= 2^{1-|w|}; common digits certify the distance bound.
    Rational cap(Integer(1), Integer(1) << (p.level - 1));
    CHECK(p.gap_upper <= cap);
    CHECK(p.gap_upper <= prev);  // levels are monotone
    prev = p.gap_upper;
    CHECK(common_run(a.stream, b.stream, p.shift, p.common) >= p.level);
  }
}

TEST_CASE("scrambled-pair verification composes both witness families") {
  SeedSpec a = SeedSpec::parse(2, "1;1");
  SeedSpec b = SeedSpec::parse(2, "2;2");
  ScrambleConfig cfg;
  cfg.count = 4;
  cfg.j_max = 6;
  ScrambleReport rep = verify_scrambled_pair(a, b, cfg);
  CHECK(rep.verdict);
  CHECK(rep.separations_ok);
  CHECK(rep.proximities_ok);
  CHECK(static_cast<std::int64_t>(rep.separations.size()) >= cfg.count);
  CHECK(rep.min_gap == Rational(1, 8) * Rational(1, 12) * Rational(1, 12));

  // Mixed alphabet bounds: the first shift already separates.
  ScrambleReport mixed = verify_scrambled_pair(SeedSpec::parse(3, "2;2"),
                                               SeedSpec::parse(4, "2;2"), cfg);
  CHECK(mixed.verdict);
  bool has_shift1 = false;
  for (const auto& s : mixed.separations)
    if (s.shift == 1) {
      has_shift1 = true;
      CHECK(s.gap >= Rational(5, 91));
    }
  CHECK(has_shift1);

  // Identical constructed streams are rejected up front.
  CHECK_THROWS_AS(verify_scrambled_pair(a, SeedSpec::parse(2, ";1"), cfg),
                  std::invalid_argument);
}

TEST_CASE("gap floor for bounded-digit points") {
  GapCheck g = gap_lemma_check(Word{1, 2}, Word{1, 3}, 3);
  CHECK(g.pass);
  CHECK(g.gap > 0);
  CHECK(g.gap >= g.bound);

  // Longer shared prefixes shrink both sides but keep the ordering.
  GapCheck deep = gap_lemma_check(Word{2, 1, 2, 3}, Word{2, 1, 2, 2, 1}, 3);
  CHECK(deep.pass);
  CHECK(deep.gap < g.gap);

  CHECK_THROWS_AS(gap_lemma_check(Word{1, 2}, Word{1, 2, 3}, 3),
                  std::invalid_argument);  // prefix of the other
  CHECK_THROWS_AS(gap_lemma_check(Word{1, 4}, Word{1, 2}, 3),
                  std::domain_error);  // digit above the bound
  CHECK_THROWS_AS(gap_lemma_check(Word{}, Word{1}, 3), std::invalid_argument);
}

TEST_CASE("exponent threshold matches a direct scan") {
  // Independent oracle: smallest n0 with 2^{(n - t(n) - 1) eps} >=
  // 2 (N+1)^{2 t(n)} for all n in [n0, cap], checked in exact integers for
  // eps = 1 (both sides are then plain powers).
  auto brute = [](std::int64_t nb, std::int64_t cap) {
    std::int64_t last_fail = 0;
    for (std::int64_t n = 1; n <= cap; ++n) {
      std::int64_t t = t_of(n);
      Integer lhs = n - t - 1 >= 0 ? Integer(1) << (n - t - 1) : Integer(0);
      Integer rhs = 2;
      for (std::int64_t i = 0; i < 2 * t; ++i) rhs *= nb + 1;
      if (lhs < rhs) last_fail = n;
    }
    return last_fail + 1;
  };
  CHECK(holder_threshold(2, 1) == brute(2, 4000));
  CHECK(holder_threshold(2, 1) == 15);
  CHECK(holder_threshold(3, 1) == brute(3, 4000));
  // Smaller exponents need longer prefixes.
  CHECK(holder_threshold(2, Rational(1, 2)) > holder_threshold(2, 1));
}

TEST_CASE("holder comparison holds on random constructed pairs") {
  HolderConfig cfg;
  cfg.depth = 30;
  cfg.samples = 60;
  cfg.rng_seed = 5;
  HolderReport rep = holder_check(2, cfg);
  CHECK(rep.verdict);
  CHECK(rep.failures == 0);
  CHECK(rep.chain_failures == 0);
  CHECK(rep.sample_count == 60);
  CHECK(rep.threshold == 15);
  REQUIRE(rep.c_exact.has_value());
  CHECK(*rep.c_exact == 96);  // sqrt(64 * ((N+1)(N+2))^2) for N = 2
  CHECK(rep.max_ratio <= Real(96));

  // Depth below the threshold cannot anchor the sampled pairs.
  HolderConfig shallow;
  shallow.depth = 10;
  CHECK_THROWS_AS(holder_check(2, shallow), std::invalid_argument);
}
