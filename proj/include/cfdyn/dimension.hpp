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
// Hausdorff-dimension estimation for bounded-digit sets and for the
// constructed images, via the depth-n pressure root over cylinder covers.

#ifndef CFDYN_DIMENSION_HPP_
#define CFDYN_DIMENSION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cfdyn/cf_core.hpp"
#include "cfdyn/numeric.hpp"
#include "cfdyn/word.hpp"

namespace cfdyn {

// Which depth-n cover to enumerate: all words over {1..N} (the bounded set
// E_N), or the prefixes realized by the constructed streams (the image set).
enum class SetKind { kBounded, kConstructed };

struct PressureOptions {
  double tol = 1e-4;     // bisection bracket width
  int digits10 = 40;     // working precision for the cover sums
  int threads = 0;       // 0 = hardware count
  std::int64_t block = 4096;  // deterministic reduction block
};

// Bisection bracket for the unique s in [0,1] with sum |I(w)|^s = 1.
// Endpoints are dyadic rationals, exactly representable in double; the
// two-sided sum inequality is certified at the working precision.
struct PressureResult {
  double s_lo = 0;
  double s_hi = 0;
  double root = 0;
  std::int64_t cover_size = 0;
  int iterations = 0;
};

// Denominators d_w with |I(w)| = 1/d_w. Throws NoRootError when a root in
// [0,1] cannot exist: a full-measure word (d_w = 1) makes the sum
// non-decreasing, and a length sum above 1 keeps it above 1 on all of [0,1].
PressureResult pressure_root(const std::vector<Integer>& denominators,
                             const PressureOptions& opts = {});
PressureResult pressure_root(const std::vector<Word>& cover,
                             const PressureOptions& opts = {});

struct DimEstimate {
  SetKind set_kind = SetKind::kBounded;
  std::int64_t n_bound = 0;
  std::int64_t depth = 0;
  std::int64_t cover_size = 0;
  double s_lo = 0;
  double s_hi = 0;
  double root = 0;
};

struct DimOptions {
  PressureOptions pressure;
  std::int64_t budget = 4'000'000;  // max cover size per depth
};

// Exact denominators of the depth-n cover. Throws BudgetError when the
// cover size exceeds the budget.
std::vector<Integer> cover_denominators(SetKind kind, std::int64_t n_bound,
                                        std::int64_t depth,
                                        std::int64_t budget);

// One estimate per depth 1..max_depth; stops early with a diagnostic when
// the next cover would exceed the budget.
std::vector<DimEstimate> dim_series(SetKind kind, std::int64_t n_bound,
                                    std::int64_t max_depth,
                                    const DimOptions& opts = {},
                                    std::string* diagnostic = nullptr);

// Dimension envelope 1 - 1/(N log 2) <= dim <= 1 - 1/(8 N log N); the
// hypothesis needs N >= 8.
struct JarnikBracket {
  std::int64_t n_bound = 0;
  Real lo;
  Real hi;
};
JarnikBracket jarnik_bracket(std::int64_t n_bound, int digits10 = 50);

}  // namespace cfdyn

#endif  // CFDYN_DIMENSION_HPP_
