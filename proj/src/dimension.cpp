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

#include "cfdyn/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cfdyn/parallel.hpp"
#include "cfdyn/symbolic.hpp"

namespace cfdyn {

namespace {

constexpr std::size_t kExactSumLimit = 100'000;

Integer word_denominator(const Word& w) {
  Integer q_prev = 0, q = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Integer next = w[i] * q + q_prev;
    q_prev = q;
    q = next;
  }
  return q * (q + q_prev);
}

// Balanced pairwise sum keeps intermediate denominators small enough for an
// exact feasibility check at moderate cover sizes.
Rational exact_length_sum(const std::vector<Integer>& dens) {
  std::vector<Rational> acc;
  acc.reserve(dens.size());
  for (const auto& d : dens) acc.emplace_back(Integer(1), d);
  while (acc.size() > 1) {
    std::size_t half = (acc.size() + 1) / 2;
    for (std::size_t i = 0; i + 1 < acc.size(); i += 2)
      acc[i / 2] = acc[i] + acc[i + 1];
    if (acc.size() % 2 == 1) acc[half - 1] = acc.back();
    acc.resize(half);
  }
  return acc.front();
}

// Certified sign of (sum_i exp(-s log d_i)) - 1 at the ambient precision.
// Returns +1 / -1 only when the inequality clears the error budget, else 0.
// Every term exp(-s log d) lies in (0, 1] for s in [0, 1] and d >= 2, so
// the sum is at most n; this picks enough digits that the rounding budget
// in certified_compare clears tol/20 even at that extreme.
int working_digits10(std::size_t n, const PressureOptions& opts) {
  double bits = 8 + std::log2((static_cast<double>(n) + 16) *
                              (static_cast<double>(n) + 1) * 20.0 / opts.tol);
  int digits = static_cast<int>(bits / 3.3219280948873623) + 2;
  return std::max(opts.digits10, digits);
}

int certified_compare(const std::vector<Real>& logs, double s,
                      const PressureOptions& opts, double* err_bound) {
  std::int64_t n = static_cast<std::int64_t>(logs.size());
  std::int64_t n_blocks = (n + opts.block - 1) / opts.block;
  std::vector<Real> partial(static_cast<std::size_t>(n_blocks), Real(0));
  Real s_real(s);
  parallel_blocks(n, opts.block, opts.threads,
                  [&](std::int64_t b, std::int64_t lo, std::int64_t hi) {
                    Real acc(0);
                    for (std::int64_t i = lo; i < hi; ++i)
                      acc += exp(-s_real * logs[static_cast<std::size_t>(i)]);
                    partial[static_cast<std::size_t>(b)] = acc;
                  });
  Real total(0);
  for (const auto& p : partial) total += p;

  long prec_bits = mpfr_get_prec(total.backend().data());
  Real err = Real(n + 16) * pow(Real(2), static_cast<int>(-(prec_bits - 8))) *
             (total + 1);
  if (err_bound) *err_bound = err.convert_to<double>();
  if (total - 1 > err) return 1;
  if (Real(1) - total > err) return -1;
  return 0;
}

}  // namespace

PressureResult pressure_root(const std::vector<Integer>& denominators,
                             const PressureOptions& opts) {
  if (denominators.empty())
    throw std::invalid_argument("pressure root needs a nonempty cover");
  if (opts.tol <= 0) throw std::domain_error("tolerance must be positive");
  for (const auto& d : denominators) {
    if (d < 1) throw std::domain_error("cylinder denominators are >= 1");
    if (d == 1)
      throw NoRootError(
          "cover contains a full-measure word, so the sum never drops below 1");
  }

  PrecisionScope scope(working_digits10(denominators.size(), opts));
  std::int64_t n = static_cast<std::int64_t>(denominators.size());
  std::vector<Real> logs(denominators.size(), Real(0));
  parallel_blocks(n, opts.block, opts.threads,
                  [&](std::int64_t, std::int64_t lo, std::int64_t hi) {
                    for (std::int64_t i = lo; i < hi; ++i) {
                      auto idx = static_cast<std::size_t>(i);
                      logs[idx] = log(Real(denominators[idx]));
                    }
                  });

  // Roots above 1 are out of scope; reject covers whose total length
  // exceeds 1 (exactly at moderate sizes, by certified comparison beyond).
  if (denominators.size() <= kExactSumLimit) {
    if (exact_length_sum(denominators) > 1)
      throw NoRootError("cover lengths sum above 1; no root at or below 1");
  } else {
    int c = certified_compare(logs, 1.0, opts, nullptr);
    if (c > 0)
      throw NoRootError("cover lengths sum above 1; no root at or below 1");
    if (c == 0)
      throw NoRootError(
          "cover lengths sum indistinguishable from 1 at working precision");
  }

  double err_bound = 0;
  PressureResult result;
  result.cover_size = n;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > opts.tol) {
    double mid = 0.5 * (lo + hi);
    int c = certified_compare(logs, mid, opts, &err_bound);
    if (err_bound > opts.tol / 10)
      throw std::runtime_error("summation error budget exceeds tol/10");
    if (c == 0)
      throw std::runtime_error(
          "pressure sum indistinguishable from 1 at working precision");
    if (c > 0)
      lo = mid;
    else
      hi = mid;
    ++result.iterations;
  }
  result.s_lo = lo;
  result.s_hi = hi;
  result.root = 0.5 * (lo + hi);
  return result;
}

PressureResult pressure_root(const std::vector<Word>& cover,
                             const PressureOptions& opts) {
  std::vector<Integer> dens;
  dens.reserve(cover.size());
  for (const auto& w : cover) dens.push_back(word_denominator(w));
  return pressure_root(dens, opts);
}

std::vector<Integer> cover_denominators(SetKind kind, std::int64_t n_bound,
                                        std::int64_t depth,
                                        std::int64_t budget) {
  if (n_bound < 1) throw std::domain_error("digit bound must be >= 1");
  if (depth < 1) throw std::domain_error("depth must be >= 1");

  std::vector<Integer> dens;
  if (kind == SetKind::kBounded) {
    Integer count = boost::multiprecision::pow(Integer(n_bound),
                                               static_cast<unsigned>(depth));
    if (count > budget)
      throw BudgetError("bounded cover exceeds budget at depth " +
                            std::to_string(depth),
                        budget);
    dens.reserve(count.convert_to<std::size_t>());
    std::vector<std::int64_t> digits(static_cast<std::size_t>(depth), 1);
    // Prefix continuant snapshots; an increment at position j only
    // recomputes levels j..depth.
    std::vector<Integer> q(static_cast<std::size_t>(depth) + 1);
    std::vector<Integer> q_prev(static_cast<std::size_t>(depth) + 1);
    q[0] = 1;
    q_prev[0] = 0;
    auto recompute_from = [&](std::size_t j) {
      for (std::size_t k = j; k <= static_cast<std::size_t>(depth); ++k) {
        q[k] = digits[k - 1] * q[k - 1] + q_prev[k - 1];
        q_prev[k] = q[k - 1];
      }
    };
    recompute_from(1);
    for (;;) {
      auto d_idx = static_cast<std::size_t>(depth);
      dens.push_back(q[d_idx] * (q[d_idx] + q_prev[d_idx]));
      std::size_t j = static_cast<std::size_t>(depth);
      while (j >= 1 && digits[j - 1] == n_bound) {
        digits[j - 1] = 1;
        --j;
      }
      if (j == 0) break;
      ++digits[j - 1];
      recompute_from(j);
    }
  } else {
    PrefixEnumerator en(n_bound, depth, budget);
    while (auto w = en.next()) dens.push_back(word_denominator(*w));
  }
  return dens;
}

std::vector<DimEstimate> dim_series(SetKind kind, std::int64_t n_bound,
                                    std::int64_t max_depth,
                                    const DimOptions& opts,
                                    std::string* diagnostic) {
  if (n_bound < 2) throw std::domain_error("digit bound must be >= 2");
  if (max_depth < 1) throw std::domain_error("max depth must be >= 1");
  std::vector<DimEstimate> series;
  for (std::int64_t depth = 1; depth <= max_depth; ++depth) {
    std::vector<Integer> dens;
    try {
      dens = cover_denominators(kind, n_bound, depth, opts.budget);
    } catch (const BudgetError& e) {
      if (diagnostic)
        *diagnostic = std::string(e.what()) + "; series truncated";
      break;
    }
    PressureResult r = pressure_root(dens, opts.pressure);
    series.push_back(DimEstimate{kind, n_bound, depth, r.cover_size, r.s_lo,
                                 r.s_hi, r.root});
  }
  return series;
}

JarnikBracket jarnik_bracket(std::int64_t n_bound, int digits10) {
  if (n_bound < 8)
    throw std::domain_error("dimension envelope needs a bound of at least 8");
  PrecisionScope scope(digits10 + 8);
  JarnikBracket out;
  out.n_bound = n_bound;
  out.lo = Real(1) - Real(1) / (Real(n_bound) * log(Real(2)));
  out.hi = Real(1) - Real(1) / (Real(8) * Real(n_bound) * log(Real(n_bound)));
  if (!(Real(0) < out.lo && out.lo < out.hi && out.hi < Real(1)))
    throw std::logic_error("bracket order violated");
  return out;
}

}  // namespace cfdyn
