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

#include <limits>

namespace cfdyn {

std::vector<Convergent> convergents(const Word& w) {
  std::vector<Convergent> out;
  out.reserve(w.size() + 1);
  Integer p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  Integer p = 0, q = 1;            // p_0, q_0
  out.push_back({p, q});
  for (std::size_t i = 0; i < w.size(); ++i) {
    Integer pn = w[i] * p + p_prev;
    Integer qn = w[i] * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
    out.push_back({p, q});
  }
  return out;
}

Cylinder cylinder_of(const Word& w) {
  Cylinder c;
  c.word = w;
  Integer p_prev = 1, q_prev = 0;
  Integer p = 0, q = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Integer pn = w[i] * p + p_prev;
    Integer qn = w[i] * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
  }
  c.p_prev = p_prev;
  c.q_prev = q_prev;
  c.p = p;
  c.q = q;
  Rational apex(p, q);
  Rational mediant(p + p_prev, q + q_prev);
  if (w.size() % 2 == 0) {
    c.lo = apex;
    c.hi = mediant;
  } else {
    c.lo = mediant;
    c.hi = apex;
  }
  return c;
}

Rational cf_value(const Word& w) {
  Cylinder c = cylinder_of(w);
  return Rational(c.p, c.q);
}

Word cf_expand(const Rational& x) {
  if (x < 0 || x >= 1) throw std::domain_error("cf_expand requires x in [0,1)");
  Word w;
  Integer num = numerator(x), den = denominator(x);
  // Euclidean loop: digit = floor(den/num), then (num, den) <- (den mod num, num).
  // The canonical expansion of a rational never ends in 1, since a tail value
  // in (1/2, 1) always yields one further digit.
  while (num != 0) {
    Integer a = den / num;
    Integer rem = den - a * num;
    if (a > std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("partial quotient exceeds 64 bits");
    w.push_back(static_cast<std::int64_t>(a));
    den = num;
    num = rem;
  }
  return w;
}

Rational gauss_step(const Rational& x) {
  if (x < 0 || x >= 1) throw std::domain_error("gauss_step requires x in [0,1)");
  if (x == 0) return x;
  Rational inv = 1 / x;
  return inv - floor_rational(inv);
}

Real gauss_measure(const Interval& iv, unsigned digits10) {
  if (iv.lo < 0 || iv.hi > 1)
    throw std::domain_error("gauss_measure requires an interval inside [0,1]");
  PrecisionScope scope(digits10 + 8);
  Real lo1 = Real(iv.lo) + 1;
  Real hi1 = Real(iv.hi) + 1;
  return (log(hi1) - log(lo1)) / log(Real(2));
}

Rational quasi_mult_ratio(const Word& u, const Word& v) {
  if (u.empty() || v.empty())
    throw std::invalid_argument("quasi_mult_ratio requires nonempty words");
  Integer du = cylinder_of(u).denominator();
  Integer dv = cylinder_of(v).denominator();
  Integer duv = cylinder_of(u.concat(v)).denominator();
  // |I(uv)| / (|I(u)||I(v)|) = d_u d_v / d_uv.
  return Rational(du * dv, duv);
}

Rational drop_digit_ratio(const Word& w, std::size_t k) {
  if (w.empty()) throw std::invalid_argument("drop_digit_ratio of empty word");
  Integer q_full = cylinder_of(w).q;
  Integer q_drop = cylinder_of(w.without(k)).q;
  return Rational(q_full, q_drop);
}

}  // namespace cfdyn
