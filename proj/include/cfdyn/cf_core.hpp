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

#include <vector>

#include "cfdyn/numeric.hpp"
#include "cfdyn/word.hpp"

namespace cfdyn {

// Convergent p/q of a finite continued fraction word.
struct Convergent {
  Integer p, q;
};

// The cylinder of a word w = (a_1, ..., a_n): the half-open interval of
// points in [0, 1) whose expansion starts with w.  Endpoints are p_n/q_n
// and (p_n + p_{n-1})/(q_n + q_{n-1}); p_n/q_n is the left endpoint exactly
// when n is even.  The empty word gives [0, 1).
struct Cylinder {
  Word word;
  Integer p_prev, q_prev;  // p_{n-1}, q_{n-1}
  Integer p, q;            // p_n, q_n
  Rational lo, hi;

  // Exact length q_n^{-1} (q_n + q_{n-1})^{-1}; equals hi - lo.
  Rational length() const { return Rational(1, q * (q + q_prev)); }
  // Denominator of the length; exact integer, convenient for large batches.
  Integer denominator() const { return q * (q + q_prev); }
  Interval interval() const { return Interval::half_open(lo, hi); }
};

// All convergents p_0/q_0 = 0/1 through p_n/q_n; result has size |w| + 1.
std::vector<Convergent> convergents(const Word& w);

Cylinder cylinder_of(const Word& w);

// Value p_n/q_n of a finite expansion; the empty word evaluates to 0.
Rational cf_value(const Word& w);

// Continued fraction digits of x in [0, 1).  Rationals get the canonical
// finite expansion whose last digit is >= 2; cf_expand(0) is the empty word.
// Throws std::domain_error outside [0, 1) and std::overflow_error if a
// partial quotient does not fit in 64 bits.
Word cf_expand(const Rational& x);

// One step x -> 1/x - floor(1/x); fixes 0.  Shifts the expansion left.
Rational gauss_step(const Rational& x);

// Measure (log 2)^{-1} * integral over [lo, hi] of dx/(1+x), evaluated in
// closed form at the requested precision.  Requires 0 <= lo <= hi <= 1.
Real gauss_measure(const Interval& iv, unsigned digits10 = 50);

// |I(uv)| / (|I(u)| |I(v)|); exact.  Both words must be nonempty.  The
// two-sided bound [1/8, 4] is validated exhaustively by the lemma battery.
Rational quasi_mult_ratio(const Word& u, const Word& v);

// q(w) / q(w with 1-based digit k removed); exact.  Lies in
// [(a_k + 1)/2, a_k + 1] where a_k is the removed digit.
Rational drop_digit_ratio(const Word& w, std::size_t k);

}  // namespace cfdyn
