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
//
// Orbit-density experiments: word-occurrence scans, certified digit
// sampling, invariance of the Gauss measure, and bounded-digit points
// inside a target interval.

#ifndef CFDYN_ORBIT_DENSITY_HPP_
#define CFDYN_ORBIT_DENSITY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "cfdyn/cf_core.hpp"
#include "cfdyn/numeric.hpp"
#include "cfdyn/word.hpp"

namespace cfdyn {

// Smallest 1-based i with digits_{i..i+|u|-1} = u.
std::optional<std::int64_t> word_occurs(const Word& digits, const Word& u);

struct CoverageReport {
  std::int64_t k_max = 0;
  std::int64_t m_max = 0;
  std::int64_t horizon = 0;
  // Exactly the scanned words over {1..m_max}^{<=k_max} with no occurrence,
  // in (length, lexicographic) order.
  std::vector<Word> missing;
};

// Exhaustive occurrence scan of every word over {1..m_max} of length at
// most k_max. Needs |digits| >= k_max; total word count capped by budget.
CoverageReport coverage_scan(const Word& digits, std::int64_t k_max,
                             std::int64_t m_max,
                             std::int64_t budget = 4'000'000);

struct DigitSample {
  Word digits;           // certified common prefix of the dyadic interval
  std::uint64_t seed = 0;
  int b_bits = 0;
  int resamples = 0;     // boundary hits before this sample certified
  Rational point;        // the sampled dyadic j / 2^b_bits
};

// Uniform dyadic sample x = j/2^B whose first n_digits are certified: every
// real in [x, x + 2^-B] shares them. Samples landing on a cylinder endpoint
// are flagged and redrawn (up to max_attempts). A sample that certifies
// fewer than n_digits raises CertificationError carrying the achieved depth
// and a suggested larger B.
DigitSample sample_digits(std::uint64_t seed, std::int64_t n_digits,
                          int b_bits = 512, int max_attempts = 16);

// Independent samples with per-index seeds derived from root_seed in
// counter mode; output independent of scheduling.
std::vector<DigitSample> sample_corpus(std::uint64_t root_seed,
                                       std::int64_t count,
                                       std::int64_t n_digits,
                                       int b_bits = 512, int threads = 0);

struct InvarianceReport {
  Real lhs;       // sum of branch preimage measures, branches 1..K
  Real rhs;       // measure of the interval itself
  Real residual;  // measure of (0, 1/(K+1+lo)) covering omitted branches
  bool ok = false;  // |lhs - rhs| <= residual
};

// Two-sided accounting of Gauss-measure invariance over the first K
// inverse branches x -> 1/(k + x).
InvarianceReport invariance_check(const Interval& iv, std::int64_t branches,
                                  int digits10 = 50);

struct BoundedPoint {
  Word word;                 // cylinder(word) lies inside the interval
  std::int64_t tail_bound = 1;  // sup of digits of [word, 1, 1, ...]
  Interval box;              // the certifying cylinder
  Interval point;            // tight enclosure of [word, 1, 1, ...]
};

// Finds a word whose cylinder sits inside iv by descending the cylinder
// tree toward the interval midpoint; the all-ones continuation then gives
// a point of iv with bounded digits. iv needs rational endpoints inside
// (0,1) and positive length.
BoundedPoint bounded_point_in_interval(const Interval& iv,
                                       std::int64_t max_word_len = 64);

}  // namespace cfdyn

#endif  // CFDYN_ORBIT_DENSITY_HPP_
