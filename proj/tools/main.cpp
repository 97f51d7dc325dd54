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
// Command-line front end. Exit codes: 0 success/pass, 1 verification
// failure or budget overrun, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cfdyn/cf_core.hpp"
#include "cfdyn/dimension.hpp"
#include "cfdyn/lemmas.hpp"
#include "cfdyn/numeric.hpp"
#include "cfdyn/orbit_density.hpp"
#include "cfdyn/report_json.hpp"
#include "cfdyn/scramble.hpp"
#include "cfdyn/symbolic.hpp"
#include "cfdyn/word.hpp"

namespace {

using cfdyn::ordered_json;

struct RunConfig {
  int threads = 0;  // 0 = hardware count
  int precision = 50;
  std::string format = "json";
  std::int64_t max_cover = 4'000'000;
  std::int64_t enclosure_depth = 200;
  std::uint64_t seed = 1;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

void apply_config_file(const std::string& path, RunConfig& rc) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (key == "threads") {
      rc.threads = std::stoi(val);
    } else if (key == "precision") {
      rc.precision = std::stoi(val);
    } else if (key == "format") {
      if (val != "json" && val != "csv")
        throw std::invalid_argument("config: format must be json or csv");
      rc.format = val;
    } else if (key == "max_cover") {
      rc.max_cover = std::stoll(val);
    } else if (key == "enclosure_depth") {
      rc.enclosure_depth = std::stoll(val);
    } else if (key == "seed") {
      rc.seed = std::stoull(val);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// "lo/q,hi/q" -> interval; flags chosen by the caller.
std::pair<cfdyn::Rational, cfdyn::Rational> parse_endpoints(
    const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected two rationals 'lo,hi'");
  return {cfdyn::parse_fraction(trim(text.substr(0, comma))),
          cfdyn::parse_fraction(trim(text.substr(comma + 1)))};
}

int run_self_check() {
  bool all = true;
  for (const auto& battery : cfdyn::self_check()) {
    std::cout << cfdyn::to_json(battery).dump() << "\n";
    all = all && battery.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continued-fraction dynamics toolkit"};
  app.require_subcommand(0, 1);

  RunConfig cfg;
  std::string config_path;
  int flag_threads = 0;
  int flag_precision = 0;
  std::string flag_format;
  std::int64_t flag_max_cover = 0;
  std::int64_t flag_enclosure_depth = 0;
  std::uint64_t flag_seed = 0;
  bool self_check = false;

  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--threads", flag_threads, "worker threads (0 = hardware)")
      ->check(CLI::Range(0, 1024));
  app.add_option("--precision", flag_precision,
                 "decimal digits for real-valued output")
      ->check(CLI::Range(6, 1000));
  app.add_option("--format", flag_format, "output format hint (json|csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--max-cover", flag_max_cover, "max cover size for dim");
  app.add_option("--enclosure-depth", flag_enclosure_depth,
                 "max enclosure depth for scramble witnesses");
  app.add_option("--seed", flag_seed, "root seed for randomized runs");
  app.add_flag("--self-check", self_check,
               "run the reduced exhaustive lemma batteries and exit");

  // expand
  auto* sub_expand = app.add_subcommand("expand", "rational -> digit word");
  std::string expand_value;
  sub_expand->add_option("--value", expand_value, "rational p/q in [0,1)")
      ->required();

  // cylinder
  auto* sub_cyl =
      app.add_subcommand("cylinder", "word -> endpoints/length/convergents");
  std::string cyl_word;
  sub_cyl->add_option("--word", cyl_word, "comma-separated digits")
      ->required();

  // construct
  auto* sub_con =
      app.add_subcommand("construct", "seed -> constructed stream prefix");
  std::int64_t con_n = 0, con_len = 0;
  std::string con_seed;
  sub_con->add_option("--n", con_n, "digit bound N")->required();
  sub_con->add_option("--seed", con_seed, "seed 'preamble;period' or period")
      ->required();
  sub_con->add_option("--length", con_len, "prefix length")->required();

  // scramble
  auto* sub_scr =
      app.add_subcommand("scramble", "verify a scrambled pair of seeds");
  std::int64_t scr_n = 0, scr_m = 0;
  std::string scr_seed_a, scr_seed_b, scr_min_gap;
  cfdyn::ScrambleConfig scr_cfg;
  sub_scr->add_option("--n", scr_n, "digit bound of the first stream")
      ->required();
  sub_scr->add_option("--seed", scr_seed_a, "first seed")->required();
  sub_scr->add_option("--n2", scr_m, "digit bound of the second stream")
      ->required();
  sub_scr->add_option("--seed2", scr_seed_b, "second seed")->required();
  sub_scr->add_option("--count", scr_cfg.count, "separation witness target");
  sub_scr->add_option("--jmax", scr_cfg.j_max, "deepest proximity level");
  sub_scr->add_option("--min-gap", scr_min_gap,
                      "separation threshold as p/q (default (1/8)|I|^2)");
  sub_scr->add_option("--sep-horizon", scr_cfg.sep_shift_horizon,
                      "shift horizon for separations");
  sub_scr->add_option("--prox-horizon", scr_cfg.prox_shift_horizon,
                      "shift horizon for constructed proximity jumps");

  // dim
  auto* sub_dim = app.add_subcommand("dim", "pressure-root series as CSV");
  std::string dim_set;
  std::int64_t dim_n = 0, dim_depth = 0;
  double dim_tol = 1e-4;
  sub_dim->add_option("--set", dim_set, "EN (bounded) or SN (constructed)")
      ->required()
      ->check(CLI::IsMember({"EN", "SN"}));
  sub_dim->add_option("--n", dim_n, "digit bound N")->required();
  sub_dim->add_option("--depth", dim_depth, "max depth")->required();
  sub_dim->add_option("--tol", dim_tol, "bisection tolerance");

  // density
  auto* sub_den = app.add_subcommand(
      "density", "digit sampling, word scans, invariance, bounded points");
  std::int64_t den_samples = 0, den_digits = 100, den_kmax = 2, den_mmax = 2;
  std::int64_t den_branches = 1000, den_maxlen = 64;
  int den_bits = 512;
  std::string den_scan_digits, den_invariance, den_bounded;
  sub_den->add_option("--samples", den_samples, "emit an NDJSON corpus");
  sub_den->add_option("--digits", den_digits, "certified digits per sample");
  sub_den->add_option("--bits", den_bits, "dyadic precision B");
  sub_den->add_option("--scan-digits", den_scan_digits,
                      "coverage-scan these digits");
  sub_den->add_option("--kmax", den_kmax, "scan word length cap");
  sub_den->add_option("--mmax", den_mmax, "scan digit cap");
  sub_den->add_option("--invariance", den_invariance,
                      "check measure invariance on 'lo,hi'");
  sub_den->add_option("--branches", den_branches, "inverse branches K");
  sub_den->add_option("--bounded-point", den_bounded,
                      "bounded-digit point inside open 'lo,hi'");
  sub_den->add_option("--max-word-len", den_maxlen, "descent length cap");

  // lemma-check
  auto* sub_lem = app.add_subcommand("lemma-check", "exhaustive batteries");
  std::string lem_kind;
  std::int64_t lem_max_digit = 0, lem_max_len = 0, lem_horizon = 100'000;
  std::int64_t lem_n = 2, lem_depth = 40, lem_samples = 1000;
  std::string lem_eps = "1/1";
  bool lem_full_samples = false;
  sub_lem
      ->add_option("--kind", lem_kind,
                   "quasi-mult|drop-ratio|q-growth|gap|holder|schedule")
      ->required()
      ->check(CLI::IsMember({"quasi-mult", "drop-ratio", "q-growth", "gap",
                             "holder", "schedule"}));
  sub_lem->add_option("--max-digit", lem_max_digit, "digit range cap");
  sub_lem->add_option("--max-len", lem_max_len, "word length cap");
  sub_lem->add_option("--horizon", lem_horizon, "schedule horizon");
  sub_lem->add_option("--n", lem_n, "digit bound for holder");
  sub_lem->add_option("--eps", lem_eps, "holder exponent epsilon as p/q");
  sub_lem->add_option("--depth", lem_depth, "holder sample depth");
  sub_lem->add_option("--samples", lem_samples, "holder sample count");
  sub_lem->add_flag("--full-samples", lem_full_samples,
                    "include per-sample rows in the holder report");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    // Precedence: defaults < environment < config file < flags.
    if (const char* env = std::getenv("CFDYN_THREADS")) {
      int v = std::atoi(env);
      if (v > 0) cfg.threads = v;
    }
    if (!config_path.empty()) apply_config_file(config_path, cfg);
    if (app.count("--threads")) cfg.threads = flag_threads;
    if (app.count("--precision")) cfg.precision = flag_precision;
    if (app.count("--format")) cfg.format = flag_format;
    if (app.count("--max-cover")) cfg.max_cover = flag_max_cover;
    if (app.count("--enclosure-depth"))
      cfg.enclosure_depth = flag_enclosure_depth;
    if (app.count("--seed")) cfg.seed = flag_seed;

    if (self_check) return run_self_check();

    if (sub_expand->parsed()) {
      cfdyn::Word digits = cfdyn::cf_expand(cfdyn::parse_fraction(expand_value));
      std::cout << digits.str() << "\n";
      return 0;
    }

    if (sub_cyl->parsed()) {
      cfdyn::Word w = cfdyn::Word::parse(cyl_word);
      cfdyn::Cylinder c = cfdyn::cylinder_of(w);
      ordered_json j;
      j["word"] = w.str();
      j["lo"] = cfdyn::to_fraction(c.lo);
      j["hi"] = cfdyn::to_fraction(c.hi);
      j["length"] = cfdyn::to_fraction(c.length());
      ordered_json conv = ordered_json::array();
      for (const auto& pq : cfdyn::convergents(w))
        conv.push_back(pq.p.str() + "/" + pq.q.str());
      j["convergents"] = conv;
      emit(j);
      return 0;
    }

    if (sub_con->parsed()) {
      cfdyn::SeedSpec spec = cfdyn::SeedSpec::parse(con_n, con_seed);
      std::cout << spec.stream.prefix(con_len).str() << "\n";
      return 0;
    }

    if (sub_scr->parsed()) {
      cfdyn::SeedSpec a = cfdyn::SeedSpec::parse(scr_n, scr_seed_a);
      cfdyn::SeedSpec b = cfdyn::SeedSpec::parse(scr_m, scr_seed_b);
      if (!scr_min_gap.empty())
        scr_cfg.min_gap = cfdyn::parse_fraction(scr_min_gap);
      scr_cfg.enclosure_depth_cap = cfg.enclosure_depth;
      cfdyn::ScrambleReport report = cfdyn::verify_scrambled_pair(a, b, scr_cfg);
      emit(cfdyn::to_json(report));
      return report.verdict ? 0 : 1;
    }

    if (sub_dim->parsed()) {
      cfdyn::SetKind kind = dim_set == "EN" ? cfdyn::SetKind::kBounded
                                            : cfdyn::SetKind::kConstructed;
      cfdyn::DimOptions opts;
      opts.pressure.tol = dim_tol;
      opts.pressure.digits10 = std::max(cfg.precision, 40);
      opts.pressure.threads = cfg.threads;
      opts.budget = cfg.max_cover;
      std::string diagnostic;
      auto series = cfdyn::dim_series(kind, dim_n, dim_depth, opts, &diagnostic);
      std::printf("set_kind,N,depth,cover_size,s_lo,s_hi,root\n");
      for (const auto& row : series)
        std::printf("%s,%lld,%lld,%lld,%.6f,%.6f,%.6f\n", dim_set.c_str(),
                    static_cast<long long>(row.n_bound),
                    static_cast<long long>(row.depth),
                    static_cast<long long>(row.cover_size), row.s_lo, row.s_hi,
                    row.root);
      if (!diagnostic.empty()) {
        std::fprintf(stderr, "%s\n", diagnostic.c_str());
        return 1;
      }
      return 0;
    }

    if (sub_den->parsed()) {
      if (den_samples > 0) {
        auto corpus = cfdyn::sample_corpus(cfg.seed, den_samples, den_digits,
                                           den_bits, cfg.threads);
        for (const auto& s : corpus)
          std::cout << cfdyn::sample_to_json(s).dump() << "\n";
        return 0;
      }
      if (!den_scan_digits.empty()) {
        cfdyn::Word digits = cfdyn::Word::parse(den_scan_digits);
        auto report = cfdyn::coverage_scan(digits, den_kmax, den_mmax);
        emit(cfdyn::to_json(report));
        return 0;
      }
      if (!den_invariance.empty()) {
        auto [lo, hi] = parse_endpoints(den_invariance);
        auto report = cfdyn::invariance_check(cfdyn::Interval::closed(lo, hi),
                                              den_branches, cfg.precision);
        emit(cfdyn::to_json(report, cfg.precision));
        return report.ok ? 0 : 1;
      }
      if (!den_bounded.empty()) {
        auto [lo, hi] = parse_endpoints(den_bounded);
        auto point = cfdyn::bounded_point_in_interval(
            cfdyn::Interval::open(lo, hi), den_maxlen);
        // The tail-bound certificate: the word (bound+1) never occurs in
        // the digits of [word, 1, 1, ...].
        cfdyn::Word missing{point.tail_bound + 1};
        ordered_json j = cfdyn::to_json(point);
        j["missing_word"] = missing.str();
        emit(j);
        return 0;
      }
      throw std::invalid_argument(
          "density needs one of --samples/--scan-digits/--invariance/"
          "--bounded-point");
    }

    if (sub_lem->parsed()) {
      if (lem_kind == "holder") {
        cfdyn::HolderConfig hc;
        hc.epsilon = cfdyn::parse_fraction(lem_eps);
        hc.depth = lem_depth;
        hc.samples = lem_samples;
        hc.rng_seed = cfg.seed;
        auto report = cfdyn::holder_check(lem_n, hc);
        emit(cfdyn::to_json(report, cfg.precision, lem_full_samples));
        return report.verdict ? 0 : 1;
      }
      cfdyn::BatteryResult battery;
      if (lem_kind == "q-growth") {
        battery = cfdyn::battery_cylinder(lem_max_digit ? lem_max_digit : 8,
                                          lem_max_len ? lem_max_len : 6);
      } else if (lem_kind == "drop-ratio") {
        battery = cfdyn::battery_drop_ratio(lem_max_digit ? lem_max_digit : 8,
                                            lem_max_len ? lem_max_len : 6);
      } else if (lem_kind == "quasi-mult") {
        battery = cfdyn::battery_quasi_mult(lem_max_digit ? lem_max_digit : 5,
                                            lem_max_len ? lem_max_len : 8);
      } else if (lem_kind == "gap") {
        battery = cfdyn::battery_gap(lem_max_digit ? lem_max_digit : 3,
                                     lem_max_len ? lem_max_len : 5);
      } else {
        battery = cfdyn::battery_schedule(lem_horizon);
      }
      emit(cfdyn::to_json(battery));
      return battery.pass ? 0 : 1;
    }

    std::cerr << app.help() << "\n";
    return 2;
  } catch (const cfdyn::BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 1;
  } catch (const cfdyn::CertificationError& e) {
    std::cerr << "certification: " << e.what() << "\n";
    return 1;
  } catch (const cfdyn::NoRootError& e) {
    std::cerr << "no root: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
