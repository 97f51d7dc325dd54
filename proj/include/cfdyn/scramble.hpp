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

#include <optional>
#include <vector>

#include "cfdyn/cf_core.hpp"
#include "cfdyn/symbolic.hpp"

namespace cfdyn {

// Rational box around the projected shifted orbit point: the cylinder of
// digits shift+1 .. shift+depth.  The projected point always lies inside.
struct OrbitEnclosure {
  std::int64_t shift, depth;
  Cylinder box;
};
OrbitEnclosure orbit_enclosure(const SymbolStream& x, std::int64_t shift,
                               std::int64_t depth);

// Envelope of every point of I(w) whose digits beyond w stay <= n_bound,
// from the two alternating extreme continuations (1,N,1,N,...) and
// (N,1,N,1,...) extended `ext` digits.  A superset of the true hull that
// tightens as ext grows; used to separate touching cylinders.
Interval bounded_hull(const Word& w, std::int64_t n_bound, std::int64_t ext);

struct SeparationWitness {
  std::int64_t shift;
  std::int64_t depth;  // enclosure depth that certified the gap
  Rational gap;        // exact distance between the enclosure boxes
};

struct ProximityWitness {
  std::int64_t level;      // j
  std::int64_t shift;      // l_j
  std::int64_t common;     // observed common prefix length (capped)
  Rational gap_upper;      // |I(common prefix truncation)|
};

struct ScrambleConfig {
  std::int64_t count = 10;
  std::int64_t j_max = 20;
  // Default: (1/8) min(|I(N+1)|, |I(M+1)|)^2.
  std::optional<Rational> min_gap;
  std::int64_t sep_shift_horizon = 4096;
  std::int64_t prox_linear_cap = 100'000;
  std::int64_t prox_shift_horizon = 1'000'000'000;
  std::int64_t enclosure_depth_cap = 200;
  std::int64_t common_prefix_cap = 64;
};

struct ScrambleReport {
  std::int64_t n_a, n_b;
  std::string seed_a, seed_b;
  Rational min_gap;
  std::int64_t count_target, j_max;
  std::vector<SeparationWitness> separations;
  std::vector<ProximityWitness> proximities;
  bool separations_ok, proximities_ok, verdict;
  std::vector<std::string> notes;  // diagnostics; never silently dropped
};

std::vector<SeparationWitness> separation_witnesses(const SeedSpec& a,
                                                    const SeedSpec& b,
                                                    std::int64_t horizon,
                                                    std::int64_t count,
                                                    const Rational& min_gap,
                                                    std::int64_t depth_cap,
                                                    std::vector<std::string>* notes);

std::vector<ProximityWitness> proximity_witnesses(const SeedSpec& a,
                                                  const SeedSpec& b,
                                                  const ScrambleConfig& cfg,
                                                  std::vector<std::string>* notes);

// Full certificate: `count` separations above the threshold plus proximity
// witnesses through j_max.  Precondition: the constructed streams differ.
ScrambleReport verify_scrambled_pair(const SeedSpec& a, const SeedSpec& b,
                                     const ScrambleConfig& cfg = {});

// Certified gap bound for points of the bounded-digit set: given expansions
// starting b_w and c_w (all digits <= n_bound, differing within the shared
// length), certifies |b - c| >= gap and compares against the floor
// (1/64) |I(N+1)|^2 |I(common prefix)|.
struct GapCheck {
  Rational gap;    // certified lower bound on |b - c|
  Rational bound;  // the floor above
  std::int64_t ext_used;
  bool pass;
};
GapCheck gap_lemma_check(const Word& b_w, const Word& c_w, std::int64_t n_bound,
                         std::int64_t ext_cap = 200);

// Smallest n0 such that 2^{(n-t(n)-1) eps} >= 2 (N+1)^{2 t(n)} for every
// n in [n0, scan_cap]; throws if the inequality still fails near scan_cap.
std::int64_t holder_threshold(std::int64_t n_bound, const Rational& epsilon,
                              std::int64_t scan_cap = 1'000'000);

struct HolderSample {
  std::int64_t common;   // stream-level common prefix length
  Rational gap;          // certified lower bound on |b - c|
  Rational image_gap;    // upper bound on the distance of the stripped images
  bool chain_ok;         // stripped-vs-full length step
  bool pass;             // image_gap <= C * gap^{1/(1+eps)}
};

struct HolderConfig {
  Rational epsilon = 1;
  std::int64_t depth = 40;
  std::int64_t samples = 1000;
  std::uint64_t rng_seed = 1;
  std::int64_t ext_cap = 256;
};

struct HolderReport {
  std::int64_t n_bound;
  Rational epsilon;
  std::int64_t threshold;          // K
  std::optional<Rational> c_exact; // C when it is rational
  Real c_approx;
  std::int64_t sample_count, failures, chain_failures;
  Real max_ratio;                  // observed image_gap / gap^{1/(1+eps)}
  std::vector<HolderSample> samples;
  bool verdict;
};

// Random constructed pairs at the given depth; every sampled pair shares a
// stream prefix of length >= threshold(epsilon).  All inequality checks are
// exact rational comparisons (epsilon rational).
HolderReport holder_check(std::int64_t n_bound, const HolderConfig& cfg = {});

}  // namespace cfdyn
