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

#include "cfdyn/lemmas.hpp"

#include <set>

#include "cfdyn/cf_core.hpp"
#include "cfdyn/scramble.hpp"
#include "cfdyn/symbolic.hpp"
#include "cfdyn/word.hpp"

namespace cfdyn {

namespace {

// Calls fn(word) for every word with digits in [1, max_digit], length in
// [1, max_len], in (length, lexicographic) order.
template <typename Fn>
void for_each_word(std::int64_t max_digit, std::int64_t max_len, Fn&& fn) {
  for (std::int64_t len = 1; len <= max_len; ++len) {
    std::vector<std::int64_t> digits(static_cast<std::size_t>(len), 1);
    for (;;) {
      fn(digits);
      std::int64_t j = len;
      while (j >= 1 && digits[static_cast<std::size_t>(j - 1)] == max_digit) {
        digits[static_cast<std::size_t>(j - 1)] = 1;
        --j;
      }
      if (j == 0) break;
      ++digits[static_cast<std::size_t>(j - 1)];
    }
  }
}

struct Continuants {
  std::int64_t q = 1, q_prev = 0, p = 0, p_prev = 1;
  void push(std::int64_t a) {
    std::int64_t qn = a * q + q_prev, pn = a * p + p_prev;
    q_prev = q;
    q = qn;
    p_prev = p;
    p = pn;
  }
  std::int64_t denominator() const { return q * (q + q_prev); }
};

Continuants continuants_of(const std::vector<std::int64_t>& w) {
  Continuants c;
  for (auto a : w) c.push(a);
  return c;
}

Integer int128_to_integer(unsigned __int128 v) {
  Integer hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) | Integer(static_cast<std::uint64_t>(v));
}

void finish(BatteryResult& r) { r.pass = r.failures == 0; }

}  // namespace

BatteryResult battery_cylinder(std::int64_t max_digit, std::int64_t max_len) {
  BatteryResult r;
  r.name = "cylinder";
  for_each_word(max_digit, max_len, [&](const std::vector<std::int64_t>& d) {
    ++r.cases;
    Word w(d);
    Cylinder c = cylinder_of(w);
    bool ok = c.hi - c.lo == c.length() && c.lo < c.hi;
    // q^2 >= 2^{n-1}, exactly in integers.
    Integer growth = c.q * c.q;
    ok = ok && growth * 2 >= (Integer(1) << d.size());
    if (!ok) ++r.failures;
  });
  r.details.emplace_back("max_digit", std::to_string(max_digit));
  r.details.emplace_back("max_len", std::to_string(max_len));
  finish(r);
  return r;
}

BatteryResult battery_drop_ratio(std::int64_t max_digit,
                                 std::int64_t max_len) {
  BatteryResult r;
  r.name = "drop-ratio";
  for_each_word(max_digit, max_len, [&](const std::vector<std::int64_t>& d) {
    Word w(d);
    for (std::size_t k = 1; k <= d.size(); ++k) {
      ++r.cases;
      Rational ratio = drop_digit_ratio(w, static_cast<std::int64_t>(k));
      std::int64_t a = d[k - 1];
      if (!(ratio >= Rational(a + 1, 2) && ratio <= Rational(a + 1)))
        ++r.failures;
    }
  });
  r.details.emplace_back("max_digit", std::to_string(max_digit));
  r.details.emplace_back("max_len", std::to_string(max_len));
  finish(r);
  return r;
}

BatteryResult battery_quasi_mult(std::int64_t max_digit,
                                 std::int64_t max_total_len) {
  BatteryResult r;
  r.name = "quasi-mult";
  struct Entry {
    std::int64_t q, q_prev, p, p_prev;
  };
  // Words grouped by length with their continuant data; digits <= 5 and
  // total length <= 8 keep everything within int64 / __int128.
  std::vector<std::vector<Entry>> by_len(
      static_cast<std::size_t>(max_total_len));
  std::vector<std::vector<std::vector<std::int64_t>>> words_by_len(
      static_cast<std::size_t>(max_total_len));
  for_each_word(max_digit, max_total_len - 1,
                [&](const std::vector<std::int64_t>& d) {
                  Continuants c = continuants_of(d);
                  by_len[d.size() - 1].push_back(
                      Entry{c.q, c.q_prev, c.p, c.p_prev});
                  words_by_len[d.size() - 1].push_back(d);
                });

  using U128 = unsigned __int128;
  bool have_extreme = false;
  U128 min_num = 0, min_den = 1, max_num = 0, max_den = 1;
  std::vector<std::int64_t> min_u, min_v, max_u, max_v;

  for (std::size_t lu = 1; lu + 1 <= static_cast<std::size_t>(max_total_len);
       ++lu) {
    for (std::size_t lv = 1; lu + lv <= static_cast<std::size_t>(max_total_len);
         ++lv) {
      for (std::size_t iu = 0; iu < by_len[lu - 1].size(); ++iu) {
        const Entry& u = by_len[lu - 1][iu];
        U128 du = static_cast<U128>(u.q) * (u.q + u.q_prev);
        for (std::size_t iv = 0; iv < by_len[lv - 1].size(); ++iv) {
          const Entry& v = by_len[lv - 1][iv];
          ++r.cases;
          U128 dv = static_cast<U128>(v.q) * (v.q + v.q_prev);
          // Concatenation continuants from the 2x2 product.
          std::int64_t q = u.q * v.q + u.q_prev * v.p;
          std::int64_t qp = u.q * v.q_prev + u.q_prev * v.p_prev;
          U128 duv = static_cast<U128>(q) * (q + qp);
          U128 num = du * dv;  // ratio num/duv = |I(uv)| / (|I(u)||I(v)|)
          if (!(num * 8 >= duv && num <= duv * 4)) ++r.failures;
          if (!have_extreme || num * min_den < min_num * duv) {
            min_num = num;
            min_den = duv;
            min_u = words_by_len[lu - 1][iu];
            min_v = words_by_len[lv - 1][iv];
          }
          if (!have_extreme || num * max_den > max_num * duv) {
            max_num = num;
            max_den = duv;
            max_u = words_by_len[lu - 1][iu];
            max_v = words_by_len[lv - 1][iv];
          }
          have_extreme = true;
        }
      }
    }
  }

  auto ratio_str = [](U128 n, U128 d) {
    return to_fraction(
        Rational(int128_to_integer(n), int128_to_integer(d)));
  };
  r.details.emplace_back("bound", "[1/8, 4]");
  if (have_extreme) {
    r.details.emplace_back("min_ratio", ratio_str(min_num, min_den));
    r.details.emplace_back("min_u", Word(min_u).str());
    r.details.emplace_back("min_v", Word(min_v).str());
    r.details.emplace_back("max_ratio", ratio_str(max_num, max_den));
    r.details.emplace_back("max_u", Word(max_u).str());
    r.details.emplace_back("max_v", Word(max_v).str());
  }
  finish(r);
  return r;
}

BatteryResult battery_gap(std::int64_t max_digit, std::int64_t max_len) {
  BatteryResult r;
  r.name = "gap";
  std::vector<Word> words;
  for_each_word(max_digit, max_len,
                [&](const std::vector<std::int64_t>& d) { words.emplace_back(d); });
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (words[i].is_prefix_of(words[j]) || words[j].is_prefix_of(words[i]))
        continue;
      ++r.cases;
      GapCheck g = gap_lemma_check(words[i], words[j], max_digit, 256);
      if (!g.pass) ++r.failures;
    }
  }
  r.details.emplace_back("digit_bound", std::to_string(max_digit));
  r.details.emplace_back("max_len", std::to_string(max_len));
  finish(r);
  return r;
}

BatteryResult battery_schedule(std::int64_t horizon) {
  BatteryResult r;
  r.name = "schedule";
  std::set<std::int64_t> brute;
  for (std::int64_t m = 1; m * m * m <= horizon; ++m)
    for (std::int64_t t = 1; t <= m; ++t)
      if (m * m * m + t <= horizon) brute.insert(m * m * m + t);

  std::int64_t running_t = 0;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    ++r.cases;
    ScheduleInfo info = schedule_info(n);
    bool expect_in = brute.count(n) > 0;
    if (expect_in) ++running_t;
    bool ok = info.in_r == expect_in && info.t == running_t;
    if (expect_in) ok = ok && r_of(info.k) == n;
    // t^3 <= 8 n^2 for n >= 8; 512 t^3 >= n^2 for n >= 64 (integer-exact).
    if (n >= 8)
      ok = ok && info.t * info.t * info.t <= 8 * n * n;
    if (n >= 64)
      ok = ok && 512 * info.t * info.t * info.t >= n * n;
    if (!ok) ++r.failures;
  }
  r.details.emplace_back("horizon", std::to_string(horizon));
  finish(r);
  return r;
}

std::vector<BatteryResult> self_check() {
  std::vector<BatteryResult> out;
  out.push_back(battery_cylinder(5, 4));
  out.push_back(battery_drop_ratio(5, 4));
  out.push_back(battery_quasi_mult(4, 6));
  out.push_back(battery_gap(3, 4));
  out.push_back(battery_schedule(10'000));
  return out;
}

}  // namespace cfdyn
