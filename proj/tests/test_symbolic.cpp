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

#include <set>
#include <unordered_set>

#include "cfdyn/symbolic.hpp"
#include "doctest.h"

using namespace cfdyn;

namespace {

// Brute-force schedule membership oracle, independent of schedule_info.
bool brute_in_r(std::int64_t n) {
  for (std::int64_t m = 1; m * m * m <= n; ++m)
    if (n - m * m * m >= 1 && n - m * m * m <= m) return true;
  return false;
}

}  // namespace

TEST_CASE("splice schedule begins 2, 9, 10, 28, 29, 30") {
  CHECK(r_of(0) == 0);
  CHECK(r_of(1) == 2);
  CHECK(r_of(2) == 9);
  CHECK(r_of(3) == 10);
  CHECK(r_of(4) == 28);
  CHECK(r_of(5) == 29);
  CHECK(r_of(6) == 30);
  CHECK(r_of(7) == 65);  // m = 4 block starts at 4^3 + 1
}

TEST_CASE("schedule classification agrees with brute force") {
  std::int64_t t = 0, k = 0;
  for (std::int64_t n = 1; n <= 5000; ++n) {
    bool in = brute_in_r(n);
    if (in) {
      ++t;
      ++k;
    }
    ScheduleInfo info = schedule_info(n);
    CHECK(info.in_r == in);
    CHECK(info.t == t);
    if (in) {
      CHECK(info.k == k);
      CHECK(r_of(info.k) == n);
    }
  }
}

TEST_CASE("seed positions skip the schedule") {
  // seed_position(f) is the f-th non-schedule position.
  std::int64_t f = 0;
  for (std::int64_t n = 1; n <= 2000; ++n) {
    if (brute_in_r(n)) continue;
    ++f;
    CHECK(seed_position(f) == n);
  }
  // Consistency with t: n - t(n) = f at a seed position.
  for (std::int64_t g = 1; g <= 50; ++g) {
    std::int64_t n = seed_position(g);
    CHECK(n - t_of(n) == g);
    CHECK(!in_schedule(n));
  }
}

TEST_CASE("eventually periodic streams parse, print and compare") {
  SymbolStream s = SymbolStream::parse("2,3;1,2");
  CHECK(s.digit(1) == 2);
  CHECK(s.digit(2) == 3);
  CHECK(s.digit(3) == 1);
  CHECK(s.digit(4) == 2);
  CHECK(s.digit(5) == 1);
  CHECK(s.prefix(6) == (Word{2, 3, 1, 2, 1, 2}));
  CHECK(s.alphabet_max() == 3);
  CHECK(s.is_literal());
  CHECK(s.seed_text() == "2,3;1,2");

  SymbolStream per = SymbolStream::parse("1,2");  // pure period
  CHECK(per.prefix(5) == (Word{1, 2, 1, 2, 1}));

  // The same eventual sequence written two ways compares equal.
  CHECK(literal_equal(SymbolStream::parse("1;2,1"), SymbolStream::parse("1,2")));
  CHECK(!literal_equal(SymbolStream::parse("1,2"), SymbolStream::parse("2,1")));
  CHECK(literal_equal(SymbolStream::constant(2), SymbolStream::parse("2;2")));

  CHECK_THROWS_AS(SymbolStream::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(SymbolStream::parse("1;"), std::invalid_argument);

  SymbolStream sh = s.shifted(3);
  for (std::int64_t i = 1; i <= 12; ++i) CHECK(sh.digit(i) == s.digit(i + 3));
}

TEST_CASE("block echo image lists runs of ones followed by seed echoes") {
  SymbolStream g = SymbolStream::g_image(3, SymbolStream::constant(2));
  CHECK(g.prefix(13) == (Word{3, 1, 2, 1, 1, 2, 2, 1, 1, 1, 2, 2, 2}));
  CHECK(g.alphabet_max() == 3);

  // Non-constant seed: echoes replay the seed prefix.
  SymbolStream g2 = SymbolStream::g_image(4, SymbolStream::parse("2,3"));
  CHECK(g2.prefix(7) == (Word{4, 1, 2, 1, 1, 2, 3}));

  // Seed digits above the bound are rejected.
  CHECK_THROWS_AS(SymbolStream::g_image(2, SymbolStream::constant(3)),
                  std::domain_error);
}

TEST_CASE("triangular repetition replays prefixes") {
  SymbolStream th = SymbolStream::theta_image(SymbolStream::parse("4,5,6"));
  CHECK(th.prefix(10) == (Word{4, 4, 5, 4, 5, 6, 4, 5, 6, 4}));
}

TEST_CASE("interleaving places control digits exactly on the schedule") {
  SymbolStream x = SymbolStream::constant(1);
  SymbolStream y = SymbolStream::parse("7,8,9");
  SymbolStream psi = SymbolStream::psi_image(x, y);
  CHECK(psi.digit(2) == 7);
  CHECK(psi.digit(9) == 8);
  CHECK(psi.digit(10) == 9);
  CHECK(psi.digit(28) == 7);  // period 3 wraps
  for (std::int64_t n = 1; n <= 40; ++n)
    if (!in_schedule(n)) CHECK(psi.digit(n) == 1);
}

TEST_CASE("constructed stream matches the worked example") {
  SeedSpec spec = SeedSpec::parse(3, "2;2");
  CHECK(spec.stream.prefix(12) == (Word{2, 3, 2, 2, 2, 2, 2, 2, 3, 1, 2, 2}));
  CHECK(spec.seed.seed_text() == "2;2");
  CHECK(spec.n_bound == 3);

  // Every non-schedule position carries the seed digit; schedule positions
  // stay within the enlarged alphabet {1..N+1}... here bounded by N.
  for (std::int64_t n = 1; n <= 200; ++n) {
    std::int64_t d = spec.stream.digit(n);
    CHECK(d >= 1);
    CHECK(d <= 3);
    if (!in_schedule(n)) CHECK(d == 2);
  }

  CHECK_THROWS_AS(SeedSpec::parse(2, "3;1"), std::domain_error);
}

TEST_CASE("schedule stripping inverts the construction on prefixes") {
  for (std::int64_t nb = 1; nb <= 3; ++nb) {
    SymbolStream seed = SymbolStream::parse(nb == 1 ? "1" : "1,2");
    SeedSpec spec = SeedSpec::make(nb, seed);
    for (std::int64_t n : {1, 2, 5, 9, 16, 30}) {
      Word w = spec.stream.prefix(n);
      Word stripped = strip_schedule(w);
      CHECK(static_cast<std::int64_t>(stripped.size()) == n - t_of(n));
      CHECK(stripped == seed.prefix(n - t_of(n)));
      auto inv = delta_inverse_prefix(nb, w);
      REQUIRE(inv.has_value());
      CHECK(*inv == stripped);
    }
  }

  // A corrupted control digit is detected.
  SeedSpec spec = SeedSpec::parse(3, "2;2");
  Word w = spec.stream.prefix(12);
  std::vector<std::int64_t> d = w.digits();
  d[1] = 1;  // position 2 must carry the control digit 3
  CHECK(!delta_inverse_prefix(3, Word(std::move(d))).has_value());

  // A corrupted free digit changes the seed, so inversion still succeeds:
  // only schedule positions are constrained at this prefix length.
  std::vector<std::int64_t> d2 = w.digits();
  d2[0] = 1;
  auto inv2 = delta_inverse_prefix(3, Word(std::move(d2)));
  CHECK(inv2.has_value());

  // Digits above the alphabet bound are rejected.
  CHECK_THROWS_AS(delta_inverse_prefix(2, Word{3, 1}), std::domain_error);
}

TEST_CASE("control digits are determined by earlier free digits") {
  // Changing a free digit that some echo replays must change the later
  // control digits: corrupt position 1 and keep everything else, then ask
  // whether the word is still a constructed prefix at a length where the
  // echo of x_1 has appeared.
  SeedSpec a = SeedSpec::parse(2, "1;1");
  Word w = a.stream.prefix(30);
  std::vector<std::int64_t> d = w.digits();
  d[0] = 2;  // x_1 := 2 while later echoes still replay x_1 = 1
  CHECK(!delta_inverse_prefix(2, Word(std::move(d))).has_value());
}

TEST_CASE("prefix counts and enumeration agree") {
  for (std::int64_t nb = 1; nb <= 3; ++nb) {
    for (std::int64_t n = 1; n <= 10; ++n) {
      Integer expect = 1;
      for (std::int64_t i = 0; i < n - t_of(n); ++i) expect *= nb;
      CHECK(prefix_count(nb, n) == expect);

      PrefixEnumerator en(nb, n);
      std::set<Word> seen;
      std::int64_t cnt = 0;
      while (auto w = en.next()) {
        ++cnt;
        CHECK(static_cast<std::int64_t>(w->size()) == n);
        CHECK(delta_inverse_prefix(nb, *w).has_value());
        seen.insert(*w);
      }
      CHECK(cnt == expect);
      CHECK(static_cast<std::int64_t>(seen.size()) == cnt);  // all distinct
    }
  }
  CHECK_THROWS_AS(PrefixEnumerator(3, 20, 100), BudgetError);
}

TEST_CASE("symbolic distance and common runs") {
  SymbolStream a = SymbolStream::parse("1,1,1,2");
  SymbolStream b = SymbolStream::parse("1,1,1,1");
  SymDistance d = sym_distance(a, b, 64);
  CHECK(d.exact);
  CHECK(d.first_diff == 4);
  CHECK(d.value == Rational(1, 8));  // 2^{-3}

  SymDistance same = sym_distance(a, a.shifted(4), 64);  // period 4
  CHECK(!same.exact);
  CHECK(same.value == Rational(Integer(1), Integer(1) << 64));

  CHECK(common_run(a, b, 0, 32) == 3);
  CHECK(common_run(a, b, 4, 32) == 3);  // periodic repeat

  // The universal shift really exposes a run of >= j ones in constructed
  // streams, for any seeds.
  SeedSpec s1 = SeedSpec::parse(2, "2;2");
  SeedSpec s2 = SeedSpec::parse(3, "1;2,1");
  for (std::int64_t j = 1; j <= 6; ++j) {
    std::int64_t shift = universal_common_run_shift(j);
    for (std::int64_t i = 1; i <= j; ++i) {
      CHECK(s1.stream.digit(shift + i) == 1);
      CHECK(s2.stream.digit(shift + i) == 1);
    }
  }
}

TEST_CASE("symbolic witnesses certify scrambling at the digit level") {
  SeedSpec a = SeedSpec::parse(2, "1;1");
  SeedSpec b = SeedSpec::parse(2, "2;2");
  SymbolicWitnesses w =
      symbolic_scramble_witnesses(a.stream, b.stream, 4096, 5, 6);
  CHECK(w.ok);
  CHECK(w.diff_shifts_found >= 5);
  REQUIRE(w.run_shift.size() == 6);
  for (std::int64_t j = 1; j <= 6; ++j) {
    std::int64_t shift = w.run_shift[static_cast<std::size_t>(j - 1)];
    CHECK(common_run(a.stream, b.stream, shift, j + 4) >= j);
  }
}
