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

#include "cfdyn/scramble.hpp"

#include <algorithm>
#include <cmath>

namespace cfdyn {

namespace {

Rational level_one_length(std::int64_t n_bound) {
  // |I(N+1)| = 1 / ((N+1)(N+2)).
  return Rational(1, Integer(n_bound + 1) * Integer(n_bound + 2));
}

Rational rational_pow(const Rational& x, std::int64_t k) {
  if (k < 0) throw std::domain_error("negative exponent");
  return Rational(boost::multiprecision::pow(numerator(x), static_cast<unsigned>(k)),
                  boost::multiprecision::pow(denominator(x), static_cast<unsigned>(k)));
}

// Certified lower bound on the distance between any bounded continuation of
// wa and any of wb, escalating the extension depth until the bound reaches
// `target` or the cap is hit.
std::pair<Rational, std::int64_t> hull_gap(const Word& wa, std::int64_t na,
                                           const Word& wb, std::int64_t nb,
                                           const Rational& target,
                                           std::int64_t ext_cap) {
  Rational gap(-1);
  std::int64_t ext = 4;
  for (;;) {
    Interval ha = bounded_hull(wa, na, ext);
    Interval hb = bounded_hull(wb, nb, ext);
    gap = signed_gap(ha, hb);
    if (gap >= target || ext >= ext_cap) return {gap, ext};
    ext = std::min(ext * 2, ext_cap);
  }
}

}  // namespace

OrbitEnclosure orbit_enclosure(const SymbolStream& x, std::int64_t shift,
                               std::int64_t depth) {
  if (shift < 0 || depth < 1)
    throw std::out_of_range("enclosure needs shift >= 0, depth >= 1");
  std::vector<std::int64_t> digits;
  digits.reserve(static_cast<std::size_t>(depth));
  for (std::int64_t i = 1; i <= depth; ++i) digits.push_back(x.digit(shift + i));
  return OrbitEnclosure{shift, depth, cylinder_of(Word(std::move(digits)))};
}

Interval bounded_hull(const Word& w, std::int64_t n_bound, std::int64_t ext) {
  if (n_bound < 1) throw std::domain_error("digit bound must be >= 1");
  if (ext < 1) throw std::out_of_range("extension depth must be >= 1");
  // Alternating extreme continuations: every point with digits <= n_bound
  // lies between them, so the envelope of the two extension cylinders
  // contains all of I(w) cap {bounded continuations}.
  Word lo_ext = w, hi_ext = w;
  for (std::int64_t i = 0; i < ext; ++i) {
    lo_ext.push_back(i % 2 == 0 ? 1 : n_bound);
    hi_ext.push_back(i % 2 == 0 ? n_bound : 1);
  }
  Cylinder a = cylinder_of(lo_ext);
  Cylinder b = cylinder_of(hi_ext);
  return Interval::closed(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

std::vector<SeparationWitness> separation_witnesses(
    const SeedSpec& a, const SeedSpec& b, std::int64_t horizon,
    std::int64_t count, const Rational& min_gap, std::int64_t depth_cap,
    std::vector<std::string>* notes) {
  std::vector<SeparationWitness> out;
  for (std::int64_t shift = 0; shift <= horizon; ++shift) {
    if (static_cast<std::int64_t>(out.size()) >= count) break;
    if (a.stream.digit(shift + 1) == b.stream.digit(shift + 1)) continue;
    std::int64_t depth = 2;
    for (;;) {
      OrbitEnclosure ea = orbit_enclosure(a.stream, shift, depth);
      OrbitEnclosure eb = orbit_enclosure(b.stream, shift, depth);
      Rational gap = signed_gap(ea.box.interval(), eb.box.interval());
      if (gap >= min_gap) {
        out.push_back(SeparationWitness{shift, depth, gap});
        break;
      }
      if (depth >= depth_cap) {
        if (notes)
          notes->push_back("shift " + std::to_string(shift) +
                           ": gap below threshold at depth cap");
        break;
      }
      depth = std::min(depth * 2, depth_cap);
    }
  }
  if (static_cast<std::int64_t>(out.size()) < count && notes)
    notes->push_back("found " + std::to_string(out.size()) + " of " +
                     std::to_string(count) + " separation witnesses within horizon " +
                     std::to_string(horizon));
  return out;
}

std::vector<ProximityWitness> proximity_witnesses(
    const SeedSpec& a, const SeedSpec& b, const ScrambleConfig& cfg,
    std::vector<std::string>* notes) {
  const std::int64_t j_max = cfg.j_max;
  const std::int64_t cap = std::max(j_max, cfg.common_prefix_cap);
  std::vector<std::optional<ProximityWitness>> best(
      static_cast<std::size_t>(j_max));

  auto process = [&](std::int64_t shift) {
    std::int64_t c = common_run(a.stream, b.stream, shift, cap);
    if (c == 0) return;
    // Lengths of the truncated common cylinders, one per level.
    Integer p_prev = 1, q_prev = 0, p = 0, q = 1;
    for (std::int64_t j = 1; j <= std::min(c, j_max); ++j) {
      std::int64_t d = a.stream.digit(shift + j);
      Integer pn = d * p + p_prev, qn = d * q + q_prev;
      p_prev = p;
      q_prev = q;
      p = pn;
      q = qn;
      Rational len(1, q * (q + q_prev));
      auto& slot = best[static_cast<std::size_t>(j - 1)];
      if (!slot || len < slot->gap_upper)
        slot = ProximityWitness{j, shift, c, len};
    }
  };

  for (std::int64_t shift = 0; shift <= cfg.prox_linear_cap; ++shift)
    process(shift);
  for (std::int64_t j = 1; j <= j_max; ++j) {
    std::int64_t shift = universal_common_run_shift(j);
    if (shift <= cfg.prox_shift_horizon) process(shift);
  }

  // A deeper witness also witnesses every lower level; reuse it whenever it
  // carries a smaller bound, which makes the bound sequence non-increasing.
  for (std::int64_t j = j_max - 1; j >= 1; --j) {
    auto& cur = best[static_cast<std::size_t>(j - 1)];
    const auto& next = best[static_cast<std::size_t>(j)];
    if (next && (!cur || next->gap_upper < cur->gap_upper)) {
      cur = next;
      cur->level = j;
    }
  }

  std::vector<ProximityWitness> out;
  for (std::int64_t j = 1; j <= j_max; ++j) {
    const auto& slot = best[static_cast<std::size_t>(j - 1)];
    if (slot) {
      out.push_back(*slot);
    } else if (notes) {
      notes->push_back("no proximity witness for level " + std::to_string(j) +
                       " within horizons");
    }
  }
  return out;
}

ScrambleReport verify_scrambled_pair(const SeedSpec& a, const SeedSpec& b,
                                     const ScrambleConfig& cfg) {
  if (a.n_bound == b.n_bound && a.seed.is_literal() && b.seed.is_literal() &&
      literal_equal(a.seed, b.seed))
    throw std::invalid_argument("constructed streams are identical");

  ScrambleReport report;
  report.n_a = a.n_bound;
  report.n_b = b.n_bound;
  report.seed_a = a.seed.is_literal() ? a.seed.seed_text() : std::string("<stream>");
  report.seed_b = b.seed.is_literal() ? b.seed.seed_text() : std::string("<stream>");
  Rational la = level_one_length(a.n_bound);
  Rational lb = level_one_length(b.n_bound);
  Rational lmin = std::min(la, lb);
  report.min_gap = cfg.min_gap ? *cfg.min_gap : Rational(lmin * lmin / 8);
  report.count_target = cfg.count;
  report.j_max = cfg.j_max;

  report.separations =
      separation_witnesses(a, b, cfg.sep_shift_horizon, cfg.count,
                           report.min_gap, cfg.enclosure_depth_cap, &report.notes);
  report.proximities = proximity_witnesses(a, b, cfg, &report.notes);

  report.separations_ok =
      static_cast<std::int64_t>(report.separations.size()) >= cfg.count;
  report.proximities_ok =
      static_cast<std::int64_t>(report.proximities.size()) == cfg.j_max;
  report.verdict = report.separations_ok && report.proximities_ok;
  return report;
}

GapCheck gap_lemma_check(const Word& b_w, const Word& c_w, std::int64_t n_bound,
                         std::int64_t ext_cap) {
  if (b_w.empty() || c_w.empty())
    throw std::invalid_argument("gap check needs nonempty words");
  if (b_w.max_digit() > n_bound || c_w.max_digit() > n_bound)
    throw std::domain_error("digit exceeds the stated bound");
  std::size_t shared = std::min(b_w.size(), c_w.size());
  std::size_t diff = shared;
  for (std::size_t i = 0; i < shared; ++i) {
    if (b_w[i] != c_w[i]) {
      diff = i;
      break;
    }
  }
  if (diff == shared)
    throw std::invalid_argument("words must differ within their shared length");

  Word lcp = b_w.prefix(diff);
  Rational l1 = level_one_length(n_bound);
  Rational bound = l1 * l1 / 64 * cylinder_of(lcp).length();
  auto [gap, ext] = hull_gap(b_w, n_bound, c_w, n_bound, bound, ext_cap);
  return GapCheck{gap, bound, ext, gap >= bound};
}

std::int64_t holder_threshold(std::int64_t n_bound, const Rational& epsilon,
                              std::int64_t scan_cap) {
  if (epsilon <= 0) throw std::domain_error("epsilon must be positive");
  Integer pe_i = numerator(epsilon), qe_i = denominator(epsilon);
  if (pe_i > 1000 || qe_i > 1000)
    throw std::invalid_argument("epsilon numerator/denominator too large");
  std::int64_t pe = pe_i.convert_to<std::int64_t>();
  std::int64_t qe = qe_i.convert_to<std::int64_t>();

  // 2^{(n-t-1) pe/qe} >= 2 (N+1)^{2t}  <=>  2^{(n-t-1) pe - qe} >= (N+1)^{2 t qe}.
  auto holds = [&](std::int64_t n) {
    std::int64_t t = t_of(n);
    std::int64_t lhs_exp = (n - t - 1) * pe - qe;
    if (lhs_exp < 0) return false;
    std::int64_t rhs_exp = 2 * t * qe;
    long double l = static_cast<long double>(lhs_exp) * std::log(2.0L) -
                    static_cast<long double>(rhs_exp) *
                        std::log(static_cast<long double>(n_bound + 1));
    long double margin =
        1e-6L * (1.0L + static_cast<long double>(lhs_exp + rhs_exp));
    if (l > margin) return true;
    if (l < -margin) return false;
    Integer lhs = Integer(1) << static_cast<unsigned>(lhs_exp);
    Integer rhs = boost::multiprecision::pow(Integer(n_bound + 1),
                                             static_cast<unsigned>(rhs_exp));
    return lhs >= rhs;
  };

  std::int64_t last_fail = 0;
  for (std::int64_t n = 1; n <= scan_cap; ++n)
    if (!holds(n)) last_fail = n;
  if (last_fail > scan_cap * 9 / 10)
    throw std::invalid_argument("threshold scan did not stabilize");
  return last_fail + 1;
}

HolderReport holder_check(std::int64_t n_bound, const HolderConfig& cfg) {
  if (n_bound < 2)
    throw std::domain_error("distinct pairs need an alphabet of size >= 2");
  std::int64_t threshold = holder_threshold(n_bound, cfg.epsilon);
  if (cfg.depth < threshold)
    throw std::invalid_argument(
        "depth below the inequality threshold K = " + std::to_string(threshold));

  std::int64_t pe = numerator(cfg.epsilon).convert_to<std::int64_t>();
  std::int64_t qe = denominator(cfg.epsilon).convert_to<std::int64_t>();
  std::int64_t p_exp = pe + qe, q_exp = qe;  // 1 + eps = p_exp / q_exp

  Integer d1 = Integer(n_bound + 1) * Integer(n_bound + 2);
  Integer base = boost::multiprecision::pow(Integer(64) * d1 * d1,
                                            static_cast<unsigned>(q_exp));

  HolderReport report;
  report.n_bound = n_bound;
  report.epsilon = cfg.epsilon;
  report.threshold = threshold;

  {
    Integer root_val;
    int exact = mpz_root(root_val.backend().data(), base.backend().data(),
                         static_cast<unsigned long>(p_exp));
    if (exact)
      report.c_exact = Rational(root_val);
  }
  PrecisionScope scope(50);
  report.c_approx =
      pow(Real(base), Real(1) / static_cast<unsigned>(p_exp));

  std::int64_t free = cfg.depth - t_of(cfg.depth);
  std::int64_t f_min = 1;
  while (seed_position(f_min) < threshold + 1) ++f_min;
  if (f_min > free)
    throw std::invalid_argument("depth leaves no seed positions past K");

  Rational l1 = level_one_length(n_bound);
  report.sample_count = cfg.samples;
  report.failures = 0;
  report.chain_failures = 0;
  report.max_ratio = Real(0);

  for (std::int64_t i = 0; i < cfg.samples; ++i) {
    SplitMix64 rng(derive_seed(cfg.rng_seed, static_cast<std::uint64_t>(i)));
    std::vector<std::int64_t> s1(static_cast<std::size_t>(free));
    for (auto& d : s1) d = rng.uniform(n_bound);
    std::vector<std::int64_t> s2 = s1;
    std::int64_t f = f_min + rng.uniform(free - f_min + 1) - 1;
    std::int64_t repl = rng.uniform(n_bound - 1);
    if (repl >= s1[static_cast<std::size_t>(f - 1)]) ++repl;
    s2[static_cast<std::size_t>(f - 1)] = repl;
    for (std::int64_t idx = f + 1; idx <= free; ++idx)
      s2[static_cast<std::size_t>(idx - 1)] = rng.uniform(n_bound);

    SymbolStream xa = SymbolStream::literal(Word(s1), Word{1});
    SymbolStream xb = SymbolStream::literal(Word(s2), Word{1});
    Word wa = SymbolStream::delta_image(n_bound, xa).prefix(cfg.depth);
    Word wb = SymbolStream::delta_image(n_bound, xb).prefix(cfg.depth);

    std::int64_t common = 0;
    while (common < cfg.depth && wa[static_cast<std::size_t>(common)] ==
                                     wb[static_cast<std::size_t>(common)])
      ++common;
    if (common < threshold || common >= cfg.depth)
      throw std::logic_error("sampled pair misses the threshold window");

    Word w = wa.prefix(static_cast<std::size_t>(common));
    Word stripped = strip_schedule(w);
    Rational len_full = cylinder_of(w).length();
    Rational len_stripped = cylinder_of(stripped).length();

    HolderSample sample;
    sample.common = common;
    sample.image_gap = len_stripped;
    sample.chain_ok =
        rational_pow(len_stripped, p_exp) <= rational_pow(len_full, q_exp);

    Rational target = l1 * l1 / 64 * len_full;
    auto [gap, ext] = hull_gap(wa, n_bound, wb, n_bound, target, cfg.ext_cap);
    (void)ext;
    sample.gap = gap;
    sample.pass = gap > 0 && rational_pow(sample.image_gap, p_exp) <=
                                 Rational(base) * rational_pow(gap, q_exp);

    if (!sample.pass) ++report.failures;
    if (!sample.chain_ok) ++report.chain_failures;
    if (gap > 0) {
      Real ratio = Real(sample.image_gap) /
                   pow(Real(gap), Real(q_exp) / static_cast<unsigned>(p_exp));
      if (ratio > report.max_ratio) report.max_ratio = ratio;
    }
    report.samples.push_back(std::move(sample));
  }
  report.verdict = report.failures == 0 && report.chain_failures == 0;
  return report;
}

}  // namespace cfdyn
