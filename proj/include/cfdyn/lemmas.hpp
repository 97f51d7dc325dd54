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
// Exhaustive small-range batteries for the exact cylinder facts the rest
// of the library leans on. Every battery enumerates its full range; a
// failure count of zero is the contract.

#ifndef CFDYN_LEMMAS_HPP_
#define CFDYN_LEMMAS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cfdyn/numeric.hpp"

namespace cfdyn {

struct BatteryResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  bool pass = false;
  // Ordered key/value notes (observed extremes, witnesses, bounds).
  std::vector<std::pair<std::string, std::string>> details;
};

// Length identity |I(w)| = 1/(q(q+q')) and the growth bound
// q^2 >= 2^{n-1}, over all words with digits <= max_digit, length <= max_len.
BatteryResult battery_cylinder(std::int64_t max_digit = 8,
                               std::int64_t max_len = 6);

// Digit-removal ratio q(w)/q(w drop k) within [(a_k+1)/2, a_k+1], same range.
BatteryResult battery_drop_ratio(std::int64_t max_digit = 8,
                                 std::int64_t max_len = 6);

// |I(u)||I(v)| vs |I(uv)| within [1/8, 4] over nonempty u, v with digits
// <= max_digit and |u|+|v| <= max_total_len; observed extremes reported.
BatteryResult battery_quasi_mult(std::int64_t max_digit = 5,
                                 std::int64_t max_total_len = 8);

// Certified distance between bounded continuations of every differing word
// pair (digits <= max_digit = the bound N, lengths <= max_len) at least
// (1/64)|I(N+1)|^2 |I(common prefix)|.
BatteryResult battery_gap(std::int64_t max_digit = 3,
                          std::int64_t max_len = 5);

// Closed-form splice schedule against brute force up to the horizon, plus
// the integer-exact growth bounds t^3 <= 8n^2 (n >= 8) and
// 512 t^3 >= n^2 (n >= 64).
BatteryResult battery_schedule(std::int64_t horizon = 100'000);

// Reduced-range run of every battery; fast enough for a startup self-check.
std::vector<BatteryResult> self_check();

}  // namespace cfdyn

#endif  // CFDYN_LEMMAS_HPP_
