// Copyright 2026 The gapscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gapscope/conjectures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gapscope/error.hpp"
#include "gapscope/numerics.hpp"

namespace gapscope {

double granville_limit() { return 2.0 * std::exp(-kEulerGamma); }

void ConjectureConfig::validate() const {
  if (!(c0 > 0.0) || !std::isfinite(c0)) throw ConfigError("c0 must be > 0");
  if (!(c > 1.0) || !std::isfinite(c)) throw ConfigError("c must be > 1");
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("eps must lie in (0, 1)");
  if (!(cramer_m > 0.0) || !std::isfinite(cramer_m)) {
    throw ConfigError("M must be > 0");
  }
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_range(IndexRange range, std::size_t lo, std::size_t hi,
                   const char* what) {
  if (range.first > range.last) {
    throw IndexError(std::string(what) + ": empty range");
  }
  if (range.first < lo || range.last > hi) {
    throw IndexError(std::string(what) + ": range [" + std::to_string(range.first) +
                     ", " + std::to_string(range.last) + "] outside [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

// Accumulates per-index verdicts. `tightness` is a normalised slack that is
// negative while the inequality holds; the largest one marks the witness.
class ScanBuilder {
 public:
  ScanBuilder(std::string name, IndexRange range, ScanOptions::Rows rows)
      : rows_(rows) {
    report_.name = std::move(name);
    report_.range = range;
  }

  void add(std::size_t n, double lhs, double rhs, bool violated, double tightness) {
    ++report_.tested;
    if (violated) report_.violations.push_back(n);
    if (!report_.max_margin_witness || tightness > best_) {
      best_ = tightness;
      report_.max_margin_witness = Witness{n, lhs, rhs};
    }
    if (rows_ == ScanOptions::Rows::kAll ||
        (rows_ == ScanOptions::Rows::kViolations && violated)) {
      report_.rows.push_back({n, lhs, rhs, violated});
    }
  }

  ConjectureReport finish() && {
    report_.threshold_index = report_.violations.empty()
                                  ? report_.range.first - 1
                                  : report_.violations.back();
    return std::move(report_);
  }

 private:
  ConjectureReport report_;
  ScanOptions::Rows rows_;
  double best_ = -kInf;
};

}  // namespace

ConjectureReport check_firoozbakht(const PrimeTable& table, IndexRange range,
                                   ScanOptions opts) {
  require_range(range, 1, table.count() - 1, "firoozbakht");
  ScanBuilder scan("firoozbakht", range, opts.rows);
  for (std::size_t n = range.first; n <= range.last; ++n) {
    const double rm1 = ratio_minus_one_gap(n, static_cast<double>(table.prime(n)),
                                           static_cast<double>(table.gap(n)));
    // ratio - 1 behaves like ln n / n^2; scale it so indices compare fairly.
    const double nd = static_cast<double>(n);
    const double tight = -rm1 * nd * nd / std::log(nd + 1.0);
    scan.add(n, rm1, 0.0, !(rm1 > 0.0), tight);
  }
  return std::move(scan).finish();
}

std::string GapBound::name() const {
  switch (form) {
    case GapForm::kCramerGranville: return "cramer_granville";
    case GapForm::kEq10: return "eq10";
    case GapForm::kEq27: return "eq27";
    case GapForm::kEq20: return "eq20";
    case GapForm::kEq28: return "eq28";
  }
  return {};
}

double GapBound::rhs(std::size_t n, double s_n) const {
  const double ls = std::log(s_n);
  const double nd = static_cast<double>(n);
  switch (form) {
    case GapForm::kCramerGranville:
      if (!(param > 0.0)) throw ConfigError("Cramer-Granville M must be > 0");
      return param * ls * ls;
    case GapForm::kEq10:
      return ls * ls - ls + 1.0;
    case GapForm::kEq27:
      return ls * ls - 2.0 * ls + 1.0;
    case GapForm::kEq20:
      if (!(param > 0.0 && param < 1.0)) throw ConfigError("eq20 eps must lie in (0, 1)");
      return (2.0 + param) * s_n * ls / nd + 1.0;
    case GapForm::kEq28:
      if (!(param > 0.0)) throw ConfigError("eq28 c must be > 0");
      return s_n / nd * (ls - 1.0) + param * s_n * ls * ls / (nd * nd);
  }
  return 0.0;
}

GapBound parse_gap_form(const std::string& name, const ConjectureConfig& cfg) {
  if (name == "cg" || name == "cramer_granville") return GapBound::cramer_granville(cfg.cramer_m);
  if (name == "eq10") return GapBound::eq10();
  if (name == "eq27") return GapBound::eq27();
  if (name == "eq20") return GapBound::eq20(cfg.eps);
  if (name == "eq28") return GapBound::eq28(cfg.c);
  throw ConfigError("unknown gap-bound form '" + name + "'");
}

ConjectureReport check_gap_bound(const Sequence& seq, IndexRange range,
                                 const GapBound& bound, ScanOptions opts) {
  require_range(range, 1, seq.max_index() - 1, bound.name().c_str());
  ScanBuilder scan(bound.name(), range, opts.rows);
  for (std::size_t n = range.first; n <= range.last; ++n) {
    const double g = seq.step(n);
    const double rhs = bound.rhs(n, seq.term(n));
    const bool violated = !(g < rhs);
    const double tight = rhs > 0.0 ? g / rhs - 1.0 : kInf;
    scan.add(n, g, rhs, violated, tight);
  }
  return std::move(scan).finish();
}

ConjectureReport check_gap_bound(const PrimeTable& table, IndexRange range,
                                 const GapBound& bound, ScanOptions opts) {
  return check_gap_bound(Sequence(SequenceKind::primes(), &table), range, bound, opts);
}

CramerExtremes cramer_ratio_extremes(const PrimeTable& table, IndexRange range) {
  require_range(range, 1, table.count() - 1, "cramer ratio");
  CramerExtremes out;
  out.max_ratio = -kInf;
  for (std::size_t n = range.first; n <= range.last; ++n) {
    const double lp = std::log(static_cast<double>(table.prime(n)));
    const double ratio = static_cast<double>(table.gap(n)) / (lp * lp);
    if (ratio > out.max_ratio) {
      out.max_ratio = ratio;
      out.argmax_n = n;
    }
  }
  out.exceeds_granville = out.max_ratio > granville_limit();
  return out;
}

SandwichReport check_sandwich(const PrimeTable& table, IndexRange range,
                              double eps, ScanOptions opts) {
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("eps must lie in (0, 1)");
  require_range(range, 2, table.count() - 1, "sandwich");
  SandwichReport out;
  ScanBuilder scan("sandwich", range, opts.rows);
  for (std::size_t n = range.first; n <= range.last; ++n) {
    const double rm1 = ratio_minus_one_gap(n, static_cast<double>(table.prime(n)),
                                           static_cast<double>(table.gap(n)));
    const double ln = std::log(static_cast<double>(n));
    const double lower = std::exp(-2.0 * ln);
    const double upper = std::exp((-2.0 + eps) * ln);
    if (!(rm1 > 0.0)) {
      out.lower_violations.push_back(n);
      scan.add(n, rm1, lower, true, kInf);
      continue;
    }
    // Compare in log space: ln(ratio - 1) against -2 ln n and (-2+eps) ln n.
    const double lr = std::log(rm1);
    const double lower_slack = (-2.0 * ln - lr) / ln;           // < 0 holds
    const double upper_slack = (lr - (-2.0 + eps) * ln) / ln;   // < 0 holds
    const bool low_bad = !(lower_slack < 0.0);
    const bool up_bad = !(upper_slack < 0.0);
    if (low_bad) out.lower_violations.push_back(n);
    if (up_bad) out.upper_violations.push_back(n);
    const bool lower_closer = lower_slack >= upper_slack;
    scan.add(n, rm1, lower_closer ? lower : upper, low_bad || up_bad,
             std::max(lower_slack, upper_slack));
  }
  out.report = std::move(scan).finish();
  return out;
}

double lemma22_floor(std::size_t n, double s_n, double c0) {
  const double nd = static_cast<double>(n);
  return -c0 * std::log(s_n) / (nd * nd);
}

ConjectureReport check_lemma22_hypothesis(const Sequence& seq, IndexRange range,
                                          double c0, ScanOptions opts) {
  if (!(c0 > 0.0)) throw ConfigError("c0 must be > 0");
  require_range(range, 1, seq.max_index() - 1, "lemma22 hypothesis");
  ScanBuilder scan("lemma22_hypothesis", range, opts.rows);
  for (std::size_t n = range.first; n <= range.last; ++n) {
    const double s = seq.term(n);
    const double rm1 = ratio_minus_one_gap(n, s, seq.step(n));
    const double floor_value = lemma22_floor(n, s, c0);
    const bool violated = !(rm1 > floor_value);
    const double scale = std::fabs(floor_value);
    const double tight = scale > 0.0 ? (floor_value - rm1) / scale : (violated ? kInf : -kInf);
    scan.add(n, rm1, floor_value, violated, tight);
  }
  return std::move(scan).finish();
}

ConjectureReport check_lemma22_hypothesis(const PrimeTable& table,
                                          IndexRange range, double c0,
                                          ScanOptions opts) {
  return check_lemma22_hypothesis(Sequence(SequenceKind::primes(), &table), range,
                                  c0, opts);
}

double h_frac(const Sequence& seq, std::size_t n) {
  if (n < 1) throw DomainError("h(n) needs n >= 1");
  if (n > seq.max_index()) throw IndexError("h(n) beyond sequence range");
  const double nd = static_cast<double>(n);
  CompensatedSum acc;
  for (std::size_t r = 1; r <= n; ++r) acc.add(std::expm1(std::log(seq.term(r)) / nd));
  // (n+1)/n^2 * (n + S) - 1 = 1/n + (n+1) S / n^2
  return 1.0 / nd + (nd + 1.0) * acc.value() / (nd * nd);
}

ConjectureReport check_h_ratio(const Sequence& seq,
                               std::span<const std::size_t> sample_ns, double c,
                               ScanOptions opts) {
  if (!(c > 1.0)) throw ConfigError("c must be > 1");
  if (sample_ns.empty()) throw ConfigError("h-ratio check needs sample indices");
  std::vector<std::size_t> ns(sample_ns.begin(), sample_ns.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  require_range({ns.front(), ns.back()}, 1, seq.max_index() - 1, "h ratio");

  ScanBuilder scan("h_ratio", {ns.front(), ns.back()}, opts.rows);
  for (std::size_t n : ns) {
    const double hn = h_frac(seq, n);
    const double hn1 = h_frac(seq, n + 1);
    const double ratio_m1 = (hn - hn1) / (1.0 + hn1);
    const double nd = static_cast<double>(n);
    const double floor_value = -c * std::log(seq.term(n)) / (nd * nd);
    const bool violated = !(ratio_m1 > floor_value);
    const double scale = std::fabs(floor_value);
    const double tight = scale > 0.0 ? (floor_value - ratio_m1) / scale : (violated ? kInf : -kInf);
    scan.add(n, ratio_m1, floor_value, violated, tight);
  }
  return std::move(scan).finish();
}

MeanFormulaResult check_mean_formula(const Sequence& seq, std::size_t n) {
  if (n < 1) throw DomainError("mean formula needs n >= 1");
  if (n > seq.max_index()) throw IndexError("mean formula: n beyond sequence range");
  const double nd = static_cast<double>(n);

  CompensatedSum acc;
  for (std::size_t r = 1; r < n; ++r) acc.add(std::expm1(std::log(seq.term(r)) / nd));
  const double below_n = acc.value();  // sum_{r<n} (s_r^{1/n} - 1)
  const LogRoot top = log_root(seq.term(n), n);
  acc.add(top.frac);
  const double all = acc.value();

  MeanFormulaResult out;
  out.n = n;
  out.lhs_frac = top.frac;
  out.rhs_frac = 1.0 / nd + (nd + 1.0) * all / (nd * nd);
  out.lhs = 1.0 + out.lhs_frac;
  out.rhs = 1.0 + out.rhs_frac;
  out.residual = out.lhs_frac - out.rhs_frac;

  if (seq.kind().variant() == SequenceKind::Variant::kPrimes && n >= 2) {
    const double ln = std::log(nd);
    // (n+1)/n^2 * ((n-1) + S') + 1/n + 1/(n ln n) - 1
    const double eq16_frac = -1.0 / (nd * nd) + (nd + 1.0) * below_n / (nd * nd) +
                             1.0 / nd + 1.0 / (nd * ln);
    out.eq16_residual_scaled = (out.lhs_frac - eq16_frac) * nd * ln * ln;
  }
  return out;
}

HarmonicAnalogy check_harmonic_analogy(const PrimeTable& table, std::size_t n,
                                       double a_naturals, double a_primes) {
  if (a_naturals == -1.0 || a_primes == -1.0) {
    throw DomainError("power-sum analogy needs a != -1");
  }
  if (n < 1 || n > table.count()) throw IndexError("harmonic analogy: n outside table");
  const double nd = static_cast<double>(n);
  const double pn = static_cast<double>(table.prime(n));

  CompensatedSum harmonic;
  CompensatedSum reciprocal_primes;
  CompensatedSum power_nat;
  CompensatedSum power_primes;
  for (std::size_t r = 1; r <= n; ++r) {
    const double rd = static_cast<double>(r);
    const double pr = static_cast<double>(table.prime(r));
    harmonic.add(1.0 / rd);
    reciprocal_primes.add(1.0 / pr);
    power_nat.add(std::pow(rd / nd, a_naturals));
    power_primes.add(std::pow(pr / pn, a_primes));
  }

  HarmonicAnalogy out;
  out.n = n;
  out.a_naturals = a_naturals;
  out.a_primes = a_primes;
  out.gamma_est = harmonic.value() - std::log(nd);
  out.mertens_est = reciprocal_primes.value() - std::log(std::log(pn));
  out.power_ratio_naturals = power_nat.value() * (a_naturals + 1.0) / nd;
  out.power_ratio_primes = power_primes.value() * (a_primes + 1.0) / nd;
  return out;
}

StrongConjectureReport check_strong_conjecture(const Sequence& seq,
                                               IndexRange range,
                                               unsigned min_block_log2) {
  require_range(range, 2, seq.max_index() - 1, "strong conjecture");
  const ExponentSeries series = exponent_series(seq, range.first, range.last);

  StrongConjectureReport out;
  out.undefined_count = series.entries.size() - series.defined_count();
  out.exponent_stats = summarize(series);

  for (unsigned k = 1; k < 63; ++k) {
    const std::size_t lo = std::size_t{1} << k;
    const std::size_t hi = (std::size_t{1} << (k + 1)) - 1;
    if (lo > range.last) break;
    if (lo < std::max<std::size_t>(range.first, 3) || hi > range.last) continue;
    std::vector<double> diffs;
    std::vector<double> abs_diffs;
    for (std::size_t n = lo; n <= hi; ++n) {
      const auto& e = series.entries[n - range.first];
      if (!e.value) continue;
      const double d = *e.value - exponent_asymptote(n);
      diffs.push_back(d);
      abs_diffs.push_back(std::fabs(d));
    }
    if (diffs.empty()) continue;
    out.blocks.push_back({k, lo, hi, diffs.size(), median(diffs), median(abs_diffs)});
  }

  ScanBuilder scan("strong_conjecture", range, ScanOptions::Rows::kAll);
  const BlockMedian* prev = nullptr;
  for (const auto& b : out.blocks) {
    if (b.log2_start < min_block_log2) continue;
    if (prev != nullptr) {
      const bool violated = !(b.median_abs_diff < prev->median_abs_diff);
      scan.add(b.first, b.median_abs_diff, prev->median_abs_diff, violated,
               b.median_abs_diff / prev->median_abs_diff - 1.0);
    }
    prev = &b;
  }
  out.report = std::move(scan).finish();
  out.decreasing = out.report.tested > 0 && out.report.violations.empty();
  return out;
}

}  // namespace gapscope
