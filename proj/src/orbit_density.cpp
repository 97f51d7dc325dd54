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

#include "cfdyn/orbit_density.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "cfdyn/parallel.hpp"
#include "cfdyn/scramble.hpp"

namespace cfdyn {

std::optional<std::int64_t> word_occurs(const Word& digits, const Word& u) {
  if (u.empty()) return 1;
  if (u.size() > digits.size()) return std::nullopt;
  for (std::size_t i = 0; i + u.size() <= digits.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (digits[i + k] != u[k]) {
        match = false;
        break;
      }
    }
    if (match) return static_cast<std::int64_t>(i + 1);
  }
  return std::nullopt;
}

CoverageReport coverage_scan(const Word& digits, std::int64_t k_max,
                             std::int64_t m_max, std::int64_t budget) {
  if (k_max < 1 || m_max < 1)
    throw std::domain_error("scan needs k_max >= 1 and m_max >= 1");
  if (static_cast<std::int64_t>(digits.size()) < k_max)
    throw std::invalid_argument("horizon shorter than k_max");
  Integer total = 0;
  for (std::int64_t k = 1; k <= k_max; ++k)
    total += boost::multiprecision::pow(Integer(m_max),
                                        static_cast<unsigned>(k));
  if (total > budget)
    throw BudgetError("coverage scan word count exceeds budget", budget);

  CoverageReport report;
  report.k_max = k_max;
  report.m_max = m_max;
  report.horizon = static_cast<std::int64_t>(digits.size());

  std::int64_t base = m_max + 1;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    // Occurring windows of length k, encoded base (m_max+1); windows with
    // an out-of-range digit cannot match a scanned word.
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= digits.size();
         ++i) {
      std::uint64_t code = 0;
      bool in_range = true;
      for (std::int64_t j = 0; j < k; ++j) {
        std::int64_t d = digits[i + static_cast<std::size_t>(j)];
        if (d > m_max) {
          in_range = false;
          break;
        }
        code = code * static_cast<std::uint64_t>(base) +
               static_cast<std::uint64_t>(d);
      }
      if (in_range) seen.insert(code);
    }
    std::vector<std::int64_t> word(static_cast<std::size_t>(k), 1);
    for (;;) {
      std::uint64_t code = 0;
      for (std::int64_t j = 0; j < k; ++j)
        code = code * static_cast<std::uint64_t>(base) +
               static_cast<std::uint64_t>(word[static_cast<std::size_t>(j)]);
      if (!seen.count(code)) report.missing.emplace_back(word);
      std::int64_t j = k;
      while (j >= 1 && word[static_cast<std::size_t>(j - 1)] == m_max) {
        word[static_cast<std::size_t>(j - 1)] = 1;
        --j;
      }
      if (j == 0) break;
      ++word[static_cast<std::size_t>(j - 1)];
    }
  }
  return report;
}

namespace {

// One certification attempt over [j/2^B, (j+1)/2^B]. Returns the digits on
// success, nullopt on a boundary hit; throws on genuine divergence.
std::optional<Word> certify_interval(const Rational& x, int b_bits,
                                     std::int64_t n_digits) {
  Rational u = x;
  Rational v = x + Rational(Integer(1), Integer(1) << b_bits);
  std::vector<std::int64_t> digits;
  digits.reserve(static_cast<std::size_t>(n_digits));
  while (static_cast<std::int64_t>(digits.size()) < n_digits) {
    if (u == 0) return std::nullopt;  // endpoint expansion exhausted
    Integer fu = floor_rational(Rational(1) / u);
    Integer fv = floor_rational(Rational(1) / v);
    if (fu != fv) {
      if (u * fu == 1) return std::nullopt;  // u sits on a band boundary
      throw CertificationError(
          "digit certification diverged",
          static_cast<std::int64_t>(digits.size()), 2 * b_bits);
    }
    if (fu > (Integer(1) << 62))
      throw CertificationError("digit exceeds representable range",
                               static_cast<std::int64_t>(digits.size()),
                               b_bits);
    std::int64_t a = fu.convert_to<std::int64_t>();
    digits.push_back(a);
    Rational nu = Rational(1) / v - a;
    Rational nv = Rational(1) / u - a;
    u = nu;
    v = nv;
  }
  return Word(std::move(digits));
}

}  // namespace

DigitSample sample_digits(std::uint64_t seed, std::int64_t n_digits,
                          int b_bits, int max_attempts) {
  if (n_digits < 1) throw std::domain_error("need n_digits >= 1");
  if (b_bits < 8) throw std::domain_error("need b_bits >= 8");
  if (max_attempts < 1) throw std::domain_error("need max_attempts >= 1");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Integer j = 0;
    for (int got = 0; got < b_bits; got += 64)
      j = (j << 64) | Integer(rng.next());
    int excess = ((b_bits + 63) / 64) * 64 - b_bits;
    j >>= excess;
    Rational x(j, Integer(1) << b_bits);
    auto digits = certify_interval(x, b_bits, n_digits);
    if (!digits) continue;  // boundary hit; redraw
    DigitSample out;
    out.digits = *digits;
    out.seed = seed;
    out.b_bits = b_bits;
    out.resamples = attempt;
    out.point = x;
    return out;
  }
  throw CertificationError("all draws landed on cylinder boundaries", 0,
                           b_bits);
}

std::vector<DigitSample> sample_corpus(std::uint64_t root_seed,
                                       std::int64_t count,
                                       std::int64_t n_digits, int b_bits,
                                       int threads) {
  if (count < 1) throw std::domain_error("need count >= 1");
  std::vector<DigitSample> out(static_cast<std::size_t>(count));
  parallel_blocks(count, 64, threads,
                  [&](std::int64_t, std::int64_t lo, std::int64_t hi) {
                    for (std::int64_t i = lo; i < hi; ++i)
                      out[static_cast<std::size_t>(i)] = sample_digits(
                          derive_seed(root_seed,
                                      static_cast<std::uint64_t>(i)),
                          n_digits, b_bits);
                  });
  return out;
}

InvarianceReport invariance_check(const Interval& iv, std::int64_t branches,
                                  int digits10) {
  if (branches < 1) throw std::domain_error("need at least one branch");
  if (iv.lo < 0 || iv.hi > 1 || iv.lo > iv.hi)
    throw std::domain_error("interval must sit inside [0,1]");
  PrecisionScope scope(digits10 + 8);
  InvarianceReport report;
  report.rhs = gauss_measure(iv, digits10);
  report.lhs = Real(0);
  for (std::int64_t k = 1; k <= branches; ++k) {
    // Branch k of the inverse map sends [lo,hi] to [1/(k+hi), 1/(k+lo)].
    Interval branch = Interval::closed(Rational(1) / (Rational(k) + iv.hi),
                                       Rational(1) / (Rational(k) + iv.lo));
    report.lhs += gauss_measure(branch, digits10);
  }
  report.residual = gauss_measure(
      Interval::half_open(Rational(0),
                          Rational(1) / (Rational(branches + 1) + iv.lo)),
      digits10);
  Real diff = report.lhs - report.rhs;
  if (diff < 0) diff = -diff;
  report.ok = diff <= report.residual;
  return report;
}

BoundedPoint bounded_point_in_interval(const Interval& iv,
                                       std::int64_t max_word_len) {
  bool lo_ok = iv.lo > 0 || (iv.lo == 0 && !iv.lo_closed);
  bool hi_ok = iv.hi < 1 || (iv.hi == 1 && !iv.hi_closed);
  if (!(iv.lo >= 0 && iv.hi <= 1 && lo_ok && hi_ok && iv.lo < iv.hi))
    throw std::domain_error(
        "interval must have positive length inside (0,1)");
  if (max_word_len < 1) throw std::domain_error("need max_word_len >= 1");

  Rational target = (iv.lo + iv.hi) / 2;
  Rational t = target;  // tail coordinate of the target in the current box
  Word w;
  for (;;) {
    Cylinder cyl = cylinder_of(w);
    if (!w.empty() && iv.contains(cyl.interval())) {
      BoundedPoint out;
      out.word = w;
      out.tail_bound = std::max<std::int64_t>(w.max_digit(), 1);
      out.box = cyl.interval();
      out.point = bounded_hull(w, 1, 80);
      return out;
    }
    if (static_cast<std::int64_t>(w.size()) >= max_word_len)
      throw CertificationError(
          "interval too small for the word-length cap; reached " + cyl.interval().str(),
          static_cast<std::int64_t>(w.size()), 0);
    if (t == 0) {
      // The target degenerated to the box apex; re-aim at an interior
      // point of box intersect iv.
      Rational lo = std::max(iv.lo, cyl.lo);
      Rational hi = std::min(iv.hi, cyl.hi);
      Rational mid = (lo + hi) / 2;
      // s solves value(w, s) = mid with value(w, s) = (p + s p')/(q + s q').
      Rational s = (Rational(cyl.p) - mid * cyl.q) /
                   (mid * cyl.q_prev - Rational(cyl.p_prev));
      if (s <= 0 || s >= 1) {
        mid = (lo + 2 * hi) / 3;
        s = (Rational(cyl.p) - mid * cyl.q) /
            (mid * cyl.q_prev - Rational(cyl.p_prev));
      }
      if (s <= 0 || s >= 1)
        throw std::logic_error("retarget left the cylinder");
      t = s;
    }
    Integer a = floor_rational(Rational(1) / t);
    if (a > (Integer(1) << 62))
      throw CertificationError("descent digit exceeds representable range",
                               static_cast<std::int64_t>(w.size()), 0);
    w.push_back(a.convert_to<std::int64_t>());
    t = Rational(1) / t - Rational(a);
  }
}

}  // namespace cfdyn
