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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gapscope/prime_engine.hpp"
#include "gapscope/sequences.hpp"
#include "gapscope/stats.hpp"

// Finite-range checks of the gap-bound inequalities and asymptotic identities
// around Cramer's and Firoozbakht's conjectures. Every inequality between
// n-th roots is evaluated in frac/log form through ratio_minus_one, since the
// two sides agree to ~11 digits at n ~ 10^6.

namespace gapscope {

// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;
// Meissel-Mertens constant, 20 significant digits.
inline constexpr double kMertens = 0.26149721284764278376;

// 2 e^{-gamma}, Granville's proposed lower bound for the Cramer limsup.
double granville_limit();

// Inclusive index interval.
struct IndexRange {
  std::size_t first = 1;
  std::size_t last = 1;

  std::size_t size() const { return last >= first ? last - first + 1 : 0; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct ConjectureConfig {
  double c0 = 1.0;        // ratio-floor constant, > 0
  double c = 2.0;         // h-ratio floor and eq28 constant, > 1
  double eps = 0.5;       // sandwich / (2+eps) bound slack, in (0, 1)
  double cramer_m = 1.2;  // Cramer-Granville constant, > 0

  // ConfigError naming the offending field.
  void validate() const;
};

struct Witness {
  std::size_t n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CheckRow {
  std::size_t n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool violated = false;
};

struct ConjectureReport {
  std::string name;
  IndexRange range;
  std::size_t tested = 0;
  std::vector<std::size_t> violations;  // ascending
  // Index where the inequality came closest to failing (or failed worst),
  // measured by a check-specific normalised slack.
  std::optional<Witness> max_margin_witness;
  // Smallest N such that every tested n > N satisfies the inequality.
  std::size_t threshold_index = 0;
  // Per-index rows, as selected by ScanOptions.
  std::vector<CheckRow> rows;
};

struct ScanOptions {
  enum class Rows { kNone, kViolations, kAll };
  Rows rows = Rows::kNone;
};

// p_n^{1/n} > p_{n+1}^{1/(n+1)}. Range must lie in [1, count - 1].
ConjectureReport check_firoozbakht(const PrimeTable& table, IndexRange range,
                                   ScanOptions opts = {});

enum class GapForm {
  kCramerGranville,  // g < M ln^2 s_n
  kEq10,             // g < ln^2 s_n - ln s_n + 1
  kEq27,             // g < ln^2 s_n - 2 ln s_n + 1
  kEq20,             // g < (2 + eps) s_n ln s_n / n + 1
  kEq28,             // g < (s_n / n)(ln s_n - 1) + c s_n ln^2 s_n / n^2
};

struct GapBound {
  GapForm form = GapForm::kEq10;
  double param = 0.0;  // M, eps or c; unused by eq10/eq27

  static GapBound cramer_granville(double m) { return {GapForm::kCramerGranville, m}; }
  static GapBound eq10() { return {GapForm::kEq10, 0.0}; }
  static GapBound eq27() { return {GapForm::kEq27, 0.0}; }
  static GapBound eq20(double eps) { return {GapForm::kEq20, eps}; }
  static GapBound eq28(double c) { return {GapForm::kEq28, c}; }

  std::string name() const;
  // Right-hand side at index n for term s_n. ConfigError on a bad param.
  double rhs(std::size_t n, double s_n) const;
};

// Parses cg|cramer_granville|eq10|eq27|eq20|eq28, taking parameters from cfg.
GapBound parse_gap_form(const std::string& name, const ConjectureConfig& cfg);

ConjectureReport check_gap_bound(const Sequence& seq, IndexRange range,
                                 const GapBound& bound, ScanOptions opts = {});
ConjectureReport check_gap_bound(const PrimeTable& table, IndexRange range,
                                 const GapBound& bound, ScanOptions opts = {});

struct CramerExtremes {
  double max_ratio = 0.0;
  std::size_t argmax_n = 0;
  bool exceeds_granville = false;
};

// max over the range of (p_{n+1} - p_n) / ln^2 p_n.
CramerExtremes cramer_ratio_extremes(const PrimeTable& table, IndexRange range);

struct SandwichReport {
  ConjectureReport report;
  std::vector<std::size_t> lower_violations;  // ratio - 1 <= n^-2
  std::vector<std::size_t> upper_violations;  // ratio - 1 >= n^{-2+eps}
};

// (1 + n^-2) p_{n+1}^{1/(n+1)} < p_n^{1/n} < (1 + n^{-2+eps}) p_{n+1}^{1/(n+1)},
// i.e. n^-2 < ratio - 1 < n^{-2+eps}. Range must lie in [2, count - 1].
SandwichReport check_sandwich(const PrimeTable& table, IndexRange range,
                              double eps, ScanOptions opts = {});

// -c0 ln s_n / n^2, the floor that ratio - 1 must exceed.
double lemma22_floor(std::size_t n, double s_n, double c0);

// ratio - 1 > -c0 ln s_n / n^2.
ConjectureReport check_lemma22_hypothesis(const Sequence& seq, IndexRange range,
                                          double c0, ScanOptions opts = {});
ConjectureReport check_lemma22_hypothesis(const PrimeTable& table,
                                          IndexRange range, double c0,
                                          ScanOptions opts = {});

// h(n) - 1 with h(n) = (n+1)/n^2 sum_{r<=n} s_r^{1/n}, from compensated sums
// of expm1(ln s_r / n).
double h_frac(const Sequence& seq, std::size_t n);

// h(n)/h(n+1) - 1 > -c ln s_n / n^2 at each sampled n. Rows carry
// lhs = h(n)/h(n+1) - 1.
ConjectureReport check_h_ratio(const Sequence& seq,
                               std::span<const std::size_t> sample_ns, double c,
                               ScanOptions opts = {});

struct MeanFormulaResult {
  std::size_t n = 0;
  double lhs = 0.0;       // s_n^{1/n}
  double rhs = 0.0;       // (n+1)/n^2 sum_{r<=n} s_r^{1/n}
  double lhs_frac = 0.0;  // lhs - 1 without rounding through 1
  double rhs_frac = 0.0;
  double residual = 0.0;  // lhs - rhs
  // Primes only, n >= 2: (lhs - [(n+1)/n^2 sum_{r<n} p_r^{1/n} + 1/n +
  // 1/(n ln n)]) * n ln^2 n.
  std::optional<double> eq16_residual_scaled;
};

MeanFormulaResult check_mean_formula(const Sequence& seq, std::size_t n);

struct HarmonicAnalogy {
  std::size_t n = 0;
  double gamma_est = 0.0;    // sum_{r<=n} 1/r - ln n
  double mertens_est = 0.0;  // sum_{r<=n} 1/p_r - ln ln p_n
  double a_naturals = 2.0;
  double a_primes = 1.0;
  double power_ratio_naturals = 0.0;  // sum r^a / (n^{a+1}/(a+1))
  double power_ratio_primes = 0.0;    // sum p_r^a / (n p_n^a/(a+1))
};

// DomainError if either exponent is -1.
HarmonicAnalogy check_harmonic_analogy(const PrimeTable& table, std::size_t n,
                                       double a_naturals = 2.0,
                                       double a_primes = 1.0);

struct BlockMedian {
  unsigned log2_start = 0;  // block is [2^k, 2^{k+1})
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t defined = 0;
  double median_diff = 0.0;      // median of e_n - asymptote(n)
  double median_abs_diff = 0.0;  // median of |e_n - asymptote(n)|
};

struct StrongConjectureReport {
  // Violations are block starts 2^k (k >= min_block_log2) whose median
  // |e_n - asymptote| did not drop below the previous block's.
  ConjectureReport report;
  std::vector<BlockMedian> blocks;  // dyadic blocks wholly inside the range
  bool decreasing = false;
  SampleStats exponent_stats;       // e_n over the whole range
  std::size_t undefined_count = 0;
};

StrongConjectureReport check_strong_conjecture(const Sequence& seq,
                                               IndexRange range,
                                               unsigned min_block_log2 = 10);

}  // namespace gapscope
