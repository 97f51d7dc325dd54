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
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "cfdyn/numeric.hpp"
#include "cfdyn/word.hpp"

namespace cfdyn {

// ---------------------------------------------------------------------------
// The splice schedule R = {m^3 + t : m >= 1, 1 <= t <= m} = {2, 9, 10, 28, ...}.
// Positions in R carry control digits; all other positions carry seed digits.
// ---------------------------------------------------------------------------

struct ScheduleInfo {
  bool in_r;        // n is the k-th element of R
  std::int64_t k;   // rank within R (0 when not in R)
  std::int64_t t;   // t(n) = #{r in R : r <= n}
};

// O(1) classification of a position; n >= 1.
ScheduleInfo schedule_info(std::int64_t n);

inline std::int64_t t_of(std::int64_t n) { return schedule_info(n).t; }
inline bool in_schedule(std::int64_t n) { return schedule_info(n).in_r; }

// k-th element of R for k >= 1; r_of(0) = 0 so that the interleaving rule
// "r_{k-1} < n < r_k" covers n = 1.
std::int64_t r_of(std::int64_t k);

// Smallest position n outside R whose seed index n - t(n) equals f; f >= 1.
std::int64_t seed_position(std::int64_t f);

// ---------------------------------------------------------------------------
// Symbol streams: infinite digit sequences given as pure functions of the
// index, with memoized prefixes.  Handles are immutable and cheap to copy;
// all operations are safe for concurrent use.
// ---------------------------------------------------------------------------

class SymbolStream {
 public:
  // Eventually periodic stream: preamble then period repeated; the period
  // must be nonempty.
  static SymbolStream literal(Word preamble, Word period);
  static SymbolStream constant(std::int64_t digit);
  // Text form "preamble;period", e.g. "2,3;1,2" = (2,3,1,2,1,2,...).
  // Without a semicolon the whole text is the period.
  static SymbolStream parse(std::string_view text);

  // First digit N, then for each block k >= 1 a run of k ones followed by
  // the echo (x_1, ..., x_k).  Block k occupies positions
  // 2 + k(k-1) .. 1 + k(k+1).  Requires digits of x bounded by N.
  static SymbolStream g_image(std::int64_t n_bound, const SymbolStream& x);

  // Triangular repetition: block j (positions j(j-1)/2+1 .. j(j+1)/2)
  // carries (x_1, ..., x_j).
  static SymbolStream theta_image(const SymbolStream& x);

  // Interleaving: position r_k carries y_k, every other position n carries
  // x_{n - t(n)}.
  static SymbolStream psi_image(const SymbolStream& x, const SymbolStream& y);

  // The full construction: psi_image(x, theta_image(g_image(N, x))).
  static SymbolStream delta_image(std::int64_t n_bound, const SymbolStream& x);

  // Drops the first `offset` digits.
  SymbolStream shifted(std::int64_t offset) const;

  std::int64_t digit(std::int64_t i) const;  // 1-based
  Word prefix(std::int64_t n) const;

  // Largest digit the stream can emit.
  std::int64_t alphabet_max() const;

  bool is_literal() const;
  // Literal streams only: canonical "preamble;period" text.
  std::string seed_text() const;

  bool same_node(const SymbolStream& other) const {
    return node_ == other.node_;
  }

  // Decides equality of two eventually periodic streams.
  friend bool literal_equal(const SymbolStream& a, const SymbolStream& b);

 private:
  struct Node;
  explicit SymbolStream(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// A seed with its alphabet bound and the constructed stream.
struct SeedSpec {
  std::int64_t n_bound;  // alphabet {1..N}
  SymbolStream seed;     // literal stream over the alphabet
  SymbolStream stream;   // delta_image(n_bound, seed)

  static SeedSpec make(std::int64_t n_bound, SymbolStream seed);
  static SeedSpec parse(std::int64_t n_bound, std::string_view seed_text);
};

// ---------------------------------------------------------------------------
// Prefix-level operations.
// ---------------------------------------------------------------------------

// Deletes the digits at schedule positions; result length |w| - t(|w|).
Word strip_schedule(const Word& w);

// If w is a prefix of the constructed stream for some seed over {1..N},
// returns that seed prefix (= strip_schedule(w)); otherwise nothing.
// Digits exceeding N are rejected with std::domain_error.
std::optional<Word> delta_inverse_prefix(std::int64_t n_bound, const Word& w);

// N^{n - t(n)}, the number of constructed prefixes of length n.
Integer prefix_count(std::int64_t n_bound, std::int64_t n);

// Streams all constructed prefixes of length n in lexicographic seed order.
// Throws BudgetError at construction if the count exceeds the budget.
class PrefixEnumerator {
 public:
  PrefixEnumerator(std::int64_t n_bound, std::int64_t n,
                   std::int64_t budget = 10'000'000);

  std::optional<Word> next();

  // Seed prefix behind the most recent word; valid after a next() success.
  const std::vector<std::int64_t>& seed() const { return odometer_; }
  std::int64_t free_digits() const { return free_; }

 private:
  std::int64_t n_bound_, n_, free_;
  std::vector<std::int64_t> odometer_;
  bool started_ = false, done_ = false;
};

// Distance 2^{-i} where i is the first 0-based index at which the streams
// differ; identical prefixes up to the horizon yield the certified upper
// bound 2^{-horizon} instead.
struct SymDistance {
  bool exact;
  Rational value;
  std::int64_t first_diff;  // 1-based coordinate, 0 when not exact
};
SymDistance sym_distance(const SymbolStream& x, const SymbolStream& y,
                         std::int64_t horizon);

// Length of the common prefix of the shifted streams, capped.
std::int64_t common_run(const SymbolStream& x, const SymbolStream& y,
                        std::int64_t shift, std::int64_t cap);

// A shift at which both streams provably carry a common run of at least j
// ones, regardless of seeds and alphabet bounds: inside the schedule run of
// m = 1 + j^2 the spliced digits echo a block whose positions
// 2 + j(j-1) .. 1 + j^2 are all ones.
std::int64_t universal_common_run_shift(std::int64_t j);

// Symbol-level scrambled-pair certificate: at least `want_diffs` shifts with
// differing first digits, and for every j <= j_max some shift with a common
// run >= j.
struct SymbolicWitnesses {
  std::int64_t diff_shifts_found;
  std::vector<std::int64_t> run_shift;  // [j-1] = shift for level j
  bool ok;
};
SymbolicWitnesses symbolic_scramble_witnesses(const SymbolStream& x,
                                              const SymbolStream& y,
                                              std::int64_t horizon,
                                              std::int64_t want_diffs,
                                              std::int64_t j_max);

}  // namespace cfdyn
