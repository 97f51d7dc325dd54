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

#include "cfdyn/symbolic.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <vector>

namespace cfdyn {

namespace {

constexpr std::int64_t kCacheCap = 1 << 16;
constexpr std::int64_t kSupportCheckLimit = 10'000;

std::int64_t icbrt_below(std::int64_t n) {
  // Largest m >= 0 with m^3 < n.
  std::int64_t m = static_cast<std::int64_t>(std::cbrt(static_cast<double>(n)));
  m += 2;
  while (m > 0 && m * m * m >= n) --m;
  return m;
}

// Source of the triangular repetition at position i: block j, offset within
// block; block j spans positions j(j-1)/2+1 .. j(j+1)/2.
std::pair<std::int64_t, std::int64_t> theta_block(std::int64_t i) {
  std::int64_t j = static_cast<std::int64_t>(
      (std::sqrt(8.0 * static_cast<double>(i) + 1.0) - 1.0) / 2.0);
  if (j < 1) j = 1;
  while (j * (j + 1) / 2 < i) ++j;
  while (j > 1 && (j - 1) * j / 2 >= i) --j;
  return {j, i - j * (j - 1) / 2};
}

// Classified source of the block construction at position i >= 1:
// kind 0 = the leading alphabet digit, 1 = a filler one, 2 = seed echo.
struct GSource {
  int kind;
  std::int64_t index;  // seed index for kind 2
};

GSource g_source(std::int64_t i) {
  if (i == 1) return {0, 0};
  // Block k spans positions 2 + k(k-1) .. 1 + k(k+1): k ones, then the
  // echo of the first k seed digits.
  std::int64_t k =
      static_cast<std::int64_t>(std::sqrt(static_cast<double>(i)));
  if (k < 1) k = 1;
  while (1 + k * (k + 1) < i) ++k;
  while (k > 1 && 2 + k * (k - 1) > i) --k;
  if (i <= 1 + k * k) return {1, 0};
  return {2, i - 1 - k * k};
}

// Seed index consumed by the spliced digit of rank k, or 0 if none.
std::int64_t spliced_seed_index(std::int64_t k) {
  auto [j, off] = theta_block(k);
  (void)j;
  GSource s = g_source(off);
  return s.kind == 2 ? s.index : 0;
}

// Value of the spliced digit of rank k for the given seed prefix.
std::int64_t spliced_value(std::int64_t k, std::int64_t n_bound,
                           const std::vector<std::int64_t>& seed) {
  auto [j, off] = theta_block(k);
  (void)j;
  GSource s = g_source(off);
  switch (s.kind) {
    case 0:
      return n_bound;
    case 1:
      return 1;
    default:
      if (s.index > static_cast<std::int64_t>(seed.size()))
        throw std::logic_error("spliced digit references unavailable seed index");
      return seed[static_cast<std::size_t>(s.index - 1)];
  }
}

std::once_flag support_check_flag;

// The forward enumeration assumes every spliced digit up to length n only
// references seed indices among the n - t(n) free positions.  Verified once
// per process on the range the round-trip tests exercise.
void ensure_support_checked() {
  std::call_once(support_check_flag, [] {
    for (std::int64_t n = 1; n <= kSupportCheckLimit; ++n) {
      ScheduleInfo info = schedule_info(n);
      if (!info.in_r) continue;
      if (r_of(info.k) != n)
        throw std::logic_error("schedule rank inversion failed");
      std::int64_t need = spliced_seed_index(info.k);
      if (need > n - info.t)
        throw std::logic_error("spliced digit outruns available seed digits");
    }
  });
}

}  // namespace

ScheduleInfo schedule_info(std::int64_t n) {
  if (n < 1) throw std::out_of_range("positions are 1-based");
  std::int64_t m = icbrt_below(n);
  std::int64_t excess = n - m * m * m;
  ScheduleInfo info;
  info.in_r = m >= 1 && excess <= m;
  info.t = m == 0 ? 0 : (m - 1) * m / 2 + std::min(m, excess);
  info.k = info.in_r ? (m - 1) * m / 2 + excess : 0;
  return info;
}

std::int64_t r_of(std::int64_t k) {
  if (k == 0) return 0;
  if (k < 0) throw std::out_of_range("schedule ranks are positive");
  std::int64_t m = static_cast<std::int64_t>(
      (std::sqrt(8.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0);
  if (m < 1) m = 1;
  while (m * (m + 1) / 2 < k) ++m;
  while (m > 1 && (m - 1) * m / 2 >= k) --m;
  return m * m * m + (k - (m - 1) * m / 2);
}

std::int64_t seed_position(std::int64_t f) {
  if (f < 1) throw std::out_of_range("seed indices are positive");
  for (std::int64_t n = f;; ++n) {
    ScheduleInfo info = schedule_info(n);
    if (!info.in_r && n - info.t == f) return n;
  }
}

// ---------------------------------------------------------------------------
// Stream nodes.
// ---------------------------------------------------------------------------

struct SymbolStream::Node {
  enum Kind { kLiteral, kBlocks, kTriangular, kInterleave, kConstructed, kShift };

  Kind kind;
  std::int64_t param = 0;  // alphabet bound or shift offset
  Word preamble, period;
  std::shared_ptr<const Node> a, b;
  std::int64_t amax = 1;

  mutable std::mutex mu;
  mutable std::vector<std::int64_t> cache;

  std::int64_t digit(std::int64_t i) const {
    if (i < 1) throw std::out_of_range("stream positions are 1-based");
    if (i <= kCacheCap) {
      std::lock_guard<std::mutex> lock(mu);
      while (static_cast<std::int64_t>(cache.size()) < i)
        cache.push_back(raw(static_cast<std::int64_t>(cache.size()) + 1));
      return cache[static_cast<std::size_t>(i - 1)];
    }
    return raw(i);
  }

  std::int64_t raw(std::int64_t i) const {
    switch (kind) {
      case kLiteral: {
        std::int64_t pre = static_cast<std::int64_t>(preamble.size());
        if (i <= pre) return preamble[static_cast<std::size_t>(i - 1)];
        std::int64_t per = static_cast<std::int64_t>(period.size());
        return period[static_cast<std::size_t>((i - pre - 1) % per)];
      }
      case kBlocks: {
        if (i == 1) return param;
        GSource s = g_source(i);
        if (s.kind == 1) return 1;
        return a->digit(s.index);
      }
      case kTriangular: {
        auto [j, off] = theta_block(i);
        (void)j;
        return a->digit(off);
      }
      case kInterleave: {
        ScheduleInfo info = schedule_info(i);
        return info.in_r ? b->digit(info.k) : a->digit(i - info.t);
      }
      case kConstructed:
        return b->digit(i);
      case kShift:
        return a->digit(i + param);
    }
    throw std::logic_error("unreachable");
  }
};

SymbolStream SymbolStream::literal(Word preamble, Word period) {
  if (period.empty())
    throw std::invalid_argument("literal streams need a nonempty period");
  auto node = std::make_shared<Node>();
  node->kind = Node::kLiteral;
  node->amax = std::max<std::int64_t>(
      {1, preamble.max_digit(), period.max_digit()});
  node->preamble = std::move(preamble);
  node->period = std::move(period);
  return SymbolStream(std::move(node));
}

SymbolStream SymbolStream::constant(std::int64_t digit) {
  return literal(Word{}, Word{digit});
}

SymbolStream SymbolStream::parse(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos)
    return literal(Word{}, Word::parse(text));
  return literal(Word::parse(text.substr(0, semi)),
                 Word::parse(text.substr(semi + 1)));
}

SymbolStream SymbolStream::g_image(std::int64_t n_bound, const SymbolStream& x) {
  if (n_bound < 1) throw std::domain_error("alphabet bound must be >= 1");
  if (x.alphabet_max() > n_bound)
    throw std::domain_error("seed digit exceeds the alphabet bound");
  auto node = std::make_shared<Node>();
  node->kind = Node::kBlocks;
  node->param = n_bound;
  node->a = x.node_;
  node->amax = std::max<std::int64_t>(n_bound, x.node_->amax);
  return SymbolStream(std::move(node));
}

SymbolStream SymbolStream::theta_image(const SymbolStream& x) {
  auto node = std::make_shared<Node>();
  node->kind = Node::kTriangular;
  node->a = x.node_;
  node->amax = x.node_->amax;
  return SymbolStream(std::move(node));
}

SymbolStream SymbolStream::psi_image(const SymbolStream& x,
                                     const SymbolStream& y) {
  auto node = std::make_shared<Node>();
  node->kind = Node::kInterleave;
  node->a = x.node_;
  node->b = y.node_;
  node->amax = std::max(x.node_->amax, y.node_->amax);
  return SymbolStream(std::move(node));
}

SymbolStream SymbolStream::delta_image(std::int64_t n_bound,
                                       const SymbolStream& x) {
  SymbolStream composed =
      psi_image(x, theta_image(g_image(n_bound, x)));
  auto node = std::make_shared<Node>();
  node->kind = Node::kConstructed;
  node->param = n_bound;
  node->a = x.node_;
  node->b = composed.node_;
  node->amax = composed.node_->amax;
  return SymbolStream(std::move(node));
}

SymbolStream SymbolStream::shifted(std::int64_t offset) const {
  if (offset < 0) throw std::out_of_range("shift offsets are nonnegative");
  if (offset == 0) return *this;
  auto node = std::make_shared<Node>();
  if (node_->kind == Node::kShift) {
    node->kind = Node::kShift;
    node->param = node_->param + offset;
    node->a = node_->a;
  } else {
    node->kind = Node::kShift;
    node->param = offset;
    node->a = node_;
  }
  node->amax = node_->amax;
  return SymbolStream(std::move(node));
}

std::int64_t SymbolStream::digit(std::int64_t i) const { return node_->digit(i); }

Word SymbolStream::prefix(std::int64_t n) const {
  if (n < 0) throw std::out_of_range("prefix lengths are nonnegative");
  std::vector<std::int64_t> digits;
  digits.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) digits.push_back(node_->digit(i));
  return Word(std::move(digits));
}

std::int64_t SymbolStream::alphabet_max() const { return node_->amax; }

bool SymbolStream::is_literal() const {
  return node_->kind == Node::kLiteral;
}

std::string SymbolStream::seed_text() const {
  if (!is_literal())
    throw std::invalid_argument("seed text is defined for literal streams");
  return node_->preamble.str() + ";" + node_->period.str();
}

bool literal_equal(const SymbolStream& a, const SymbolStream& b) {
  if (a.same_node(b)) return true;
  if (!a.is_literal() || !b.is_literal())
    throw std::invalid_argument("literal_equal requires literal streams");
  std::int64_t pre = std::max(a.node_->preamble.size(), b.node_->preamble.size());
  std::int64_t pa = static_cast<std::int64_t>(a.node_->period.size());
  std::int64_t pb = static_cast<std::int64_t>(b.node_->period.size());
  std::int64_t l = std::lcm(pa, pb);
  if (l > (1 << 20))
    throw std::invalid_argument("periods too long to decide equality");
  std::int64_t bound = pre + l;
  for (std::int64_t i = 1; i <= bound; ++i)
    if (a.digit(i) != b.digit(i)) return false;
  return true;
}

SeedSpec SeedSpec::make(std::int64_t n_bound, SymbolStream seed) {
  if (n_bound < 1) throw std::domain_error("alphabet bound must be >= 1");
  if (seed.alphabet_max() > n_bound)
    throw std::domain_error("seed digit exceeds the alphabet bound");
  SymbolStream stream = SymbolStream::delta_image(n_bound, seed);
  return SeedSpec{n_bound, std::move(seed), std::move(stream)};
}

SeedSpec SeedSpec::parse(std::int64_t n_bound, std::string_view seed_text) {
  return make(n_bound, SymbolStream::parse(seed_text));
}

// ---------------------------------------------------------------------------
// Prefix-level operations.
// ---------------------------------------------------------------------------

Word strip_schedule(const Word& w) {
  std::vector<std::int64_t> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!in_schedule(static_cast<std::int64_t>(i + 1))) out.push_back(w[i]);
  return Word(std::move(out));
}

std::optional<Word> delta_inverse_prefix(std::int64_t n_bound, const Word& w) {
  if (n_bound < 1) throw std::domain_error("alphabet bound must be >= 1");
  ensure_support_checked();
  std::vector<std::int64_t> seed;
  seed.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > n_bound)
      throw std::domain_error("digit exceeds the alphabet bound");
    if (!in_schedule(static_cast<std::int64_t>(i + 1))) seed.push_back(w[i]);
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    ScheduleInfo info = schedule_info(static_cast<std::int64_t>(i + 1));
    if (!info.in_r) continue;
    if (w[i] != spliced_value(info.k, n_bound, seed)) return std::nullopt;
  }
  return Word(std::move(seed));
}

Integer prefix_count(std::int64_t n_bound, std::int64_t n) {
  if (n_bound < 1 || n < 1)
    throw std::domain_error("prefix_count requires positive arguments");
  std::int64_t free = n - t_of(n);
  return boost::multiprecision::pow(Integer(n_bound),
                                    static_cast<unsigned>(free));
}

PrefixEnumerator::PrefixEnumerator(std::int64_t n_bound, std::int64_t n,
                                   std::int64_t budget)
    : n_bound_(n_bound), n_(n) {
  if (n_bound < 1 || n < 1)
    throw std::domain_error("enumeration requires positive arguments");
  ensure_support_checked();
  free_ = n - t_of(n);
  if (prefix_count(n_bound, n) > budget)
    throw BudgetError("prefix enumeration exceeds budget", budget);
  odometer_.assign(static_cast<std::size_t>(free_), 1);
}

std::optional<Word> PrefixEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
  } else {
    std::int64_t i = free_ - 1;
    while (i >= 0 && odometer_[static_cast<std::size_t>(i)] == n_bound_) {
      odometer_[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) {
      done_ = true;
      return std::nullopt;
    }
    ++odometer_[static_cast<std::size_t>(i)];
  }
  std::vector<std::int64_t> digits;
  digits.reserve(static_cast<std::size_t>(n_));
  for (std::int64_t pos = 1; pos <= n_; ++pos) {
    ScheduleInfo info = schedule_info(pos);
    digits.push_back(info.in_r
                         ? spliced_value(info.k, n_bound_, odometer_)
                         : odometer_[static_cast<std::size_t>(pos - info.t - 1)]);
  }
  return Word(std::move(digits));
}

SymDistance sym_distance(const SymbolStream& x, const SymbolStream& y,
                         std::int64_t horizon) {
  if (horizon < 1) throw std::out_of_range("horizon must be >= 1");
  if (x.same_node(y)) return {true, Rational(0), 0};
  for (std::int64_t i = 1; i <= horizon; ++i) {
    if (x.digit(i) != y.digit(i))
      return {true, Rational(Integer(1), Integer(1) << (i - 1)), i};
  }
  return {false, Rational(Integer(1), Integer(1) << horizon), 0};
}

std::int64_t common_run(const SymbolStream& x, const SymbolStream& y,
                        std::int64_t shift, std::int64_t cap) {
  std::int64_t c = 0;
  while (c < cap && x.digit(shift + c + 1) == y.digit(shift + c + 1)) ++c;
  return c;
}

std::int64_t universal_common_run_shift(std::int64_t j) {
  if (j < 1 || j > 2000)
    throw std::out_of_range("run length out of supported range");
  std::int64_t m = 1 + j * j;
  return m * m * m + 1 + j * (j - 1);
}

SymbolicWitnesses symbolic_scramble_witnesses(const SymbolStream& x,
                                              const SymbolStream& y,
                                              std::int64_t horizon,
                                              std::int64_t want_diffs,
                                              std::int64_t j_max) {
  SymbolicWitnesses out;
  out.diff_shifts_found = 0;
  out.run_shift.assign(static_cast<std::size_t>(j_max), -1);
  for (std::int64_t shift = 0; shift <= horizon; ++shift) {
    std::int64_t c = common_run(x, y, shift, j_max);
    if (c == 0) {
      ++out.diff_shifts_found;
      continue;
    }
    for (std::int64_t j = 1; j <= c; ++j) {
      auto& slot = out.run_shift[static_cast<std::size_t>(j - 1)];
      if (slot < 0) slot = shift;
    }
  }
  // The schedule guarantees arbitrarily long common runs of ones; try those
  // jump targets for levels the linear scan missed.
  for (std::int64_t j = 1; j <= j_max; ++j) {
    auto& slot = out.run_shift[static_cast<std::size_t>(j - 1)];
    if (slot >= 0) continue;
    for (std::int64_t jj = j; jj <= j_max && slot < 0; ++jj) {
      std::int64_t shift = universal_common_run_shift(jj);
      if (common_run(x, y, shift, j) >= j) slot = shift;
    }
  }
  out.ok = out.diff_shifts_found >= want_diffs;
  for (std::int64_t v : out.run_shift) out.ok = out.ok && v >= 0;
  return out;
}

}  // namespace cfdyn
