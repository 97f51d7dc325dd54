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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace cfdyn {

// Exact arithmetic everywhere a statement is checked; floating point only for
// display and for sums whose error budget is tracked explicitly.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

// Raised when an enumeration or search would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::int64_t limit)
      : std::runtime_error(what), limit_(limit) {}
  std::int64_t limit() const { return limit_; }

 private:
  std::int64_t limit_;
};

// Raised when a sample cannot be certified to the requested depth.
class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, std::int64_t achieved_digits,
                     std::int64_t suggested_bits)
      : std::runtime_error(what),
        achieved_digits_(achieved_digits),
        suggested_bits_(suggested_bits) {}
  std::int64_t achieved_digits() const { return achieved_digits_; }
  std::int64_t suggested_bits() const { return suggested_bits_; }

 private:
  std::int64_t achieved_digits_;
  std::int64_t suggested_bits_;
};

// Raised when a pressure equation has no root in [0, 1].
class NoRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sets the global mpfr working precision for the lifetime of the scope.
// The precision default is process-global, so scopes must not be entered
// concurrently; parallel code fixes precision once before spawning workers.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10)
      : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Integer floor_rational(const Rational& x) {
  Integer n = numerator(x), d = denominator(x);
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

// Serializes exactly, always with an explicit denominator ("0/1", "5/91").
std::string to_fraction(const Rational& x);

// Accepts "p/q" or a bare integer "p"; rejects zero denominators.
Rational parse_fraction(std::string_view text);

// An interval with rational endpoints and explicit endpoint membership.
struct Interval {
  Rational lo, hi;
  bool lo_closed = true;
  bool hi_closed = false;

  static Interval half_open(Rational lo, Rational hi) {
    return make(std::move(lo), std::move(hi), true, false);
  }
  static Interval closed(Rational lo, Rational hi) {
    return make(std::move(lo), std::move(hi), true, true);
  }
  static Interval open(Rational lo, Rational hi) {
    return make(std::move(lo), std::move(hi), false, false);
  }

  Rational length() const { return hi - lo; }

  bool contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
  }

  // Superset test that honours endpoint membership on both sides.
  bool contains(const Interval& sub) const {
    bool lo_ok = lo < sub.lo || (lo == sub.lo && (lo_closed || !sub.lo_closed));
    bool hi_ok = hi > sub.hi || (hi == sub.hi && (hi_closed || !sub.hi_closed));
    return lo_ok && hi_ok;
  }

  std::string str() const;

 private:
  static Interval make(Rational lo, Rational hi, bool lc, bool hc) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
    Interval iv;
    iv.lo = std::move(lo);
    iv.hi = std::move(hi);
    iv.lo_closed = lc;
    iv.hi_closed = hc;
    return iv;
  }
};

// Signed distance between intervals: positive iff the closures are disjoint,
// zero when they touch in at most a point, negative on overlap.
inline Rational signed_gap(const Interval& a, const Interval& b) {
  Rational left = b.lo - a.hi;
  Rational right = a.lo - b.hi;
  return left > right ? left : right;
}

// Deterministic 64-bit generator (splitmix64).  Used instead of <random>
// distributions, whose output is implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [1, n] by rejection; n >= 1.
  std::int64_t uniform(std::int64_t n) {
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t limit = ~0ULL - ~0ULL % un;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return static_cast<std::int64_t>(v % un) + 1;
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed from a root seed and a counter.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t counter) {
  SplitMix64 g(root ^ (0x6a09e667f3bcc909ULL + counter * 0x9e3779b97f4a7c15ULL));
  g.next();
  return g.next();
}

}  // namespace cfdyn
