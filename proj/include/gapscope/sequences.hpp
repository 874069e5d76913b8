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
#include <string>
#include <string_view>
#include <vector>

#include "gapscope/prime_engine.hpp"

namespace gapscope {

// Which increasing sequence s_1, s_2, ... is under study.
class SequenceKind {
 public:
  enum class Variant { kNaturals, kPrimes, kCombo };

  static SequenceKind naturals() { return SequenceKind(Variant::kNaturals, 0, 0); }
  static SequenceKind primes() { return SequenceKind(Variant::kPrimes, 1, 0); }
  // alpha*p_r + beta*r. Needs alpha, beta >= 0, not both zero (ConfigError).
  static SequenceKind combo(double alpha, double beta);

  // "naturals", "primes" or "combo:A,B".
  static SequenceKind parse(std::string_view text);

  Variant variant() const noexcept { return variant_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  bool uses_primes() const noexcept { return variant_ != Variant::kNaturals; }
  std::string name() const;

  friend bool operator==(const SequenceKind&, const SequenceKind&) = default;

 private:
  SequenceKind(Variant v, double a, double b) : variant_(v), alpha_(a), beta_(b) {}

  Variant variant_;
  double alpha_;
  double beta_;
};

// A sequence bound to the prime table it reads from. The table pointer may
// be null for naturals; it must outlive the Sequence.
class Sequence {
 public:
  Sequence(SequenceKind kind, const PrimeTable* table);

  const SequenceKind& kind() const noexcept { return kind_; }

  // Largest index r for which term(r) is available.
  std::size_t max_index() const noexcept;

  // s_r, 1-based. IndexError past max_index().
  double term(std::size_t r) const;

  // s_{r+1} - s_r, computed from the integer gap rather than by subtracting
  // two rounded terms.
  double step(std::size_t r) const;

 private:
  SequenceKind kind_;
  const PrimeTable* table_;
};

double term(const SequenceKind& kind, std::size_t r, const PrimeTable& table);

// e_n = -ln(f(n)/f(n+1) - 1) / ln n with f(k) = s_k^{1/k}; this is a_n for
// primes, b_n for naturals. nullopt when f(n) <= f(n+1). DomainError for n < 2.
std::optional<double> exponent(const Sequence& seq, std::size_t n);
std::optional<double> exponent(const SequenceKind& kind, std::size_t n,
                               const PrimeTable& table);

// 2 - ln ln n / ln n, for n >= 3.
double exponent_asymptote(std::size_t n);

struct ExponentEntry {
  std::size_t n = 0;
  double s_n = 0.0;
  double s_next = 0.0;
  double frac_ratio = 0.0;  // f(n)/f(n+1) - 1
  std::optional<double> value;
};

struct ExponentSeries {
  SequenceKind kind = SequenceKind::naturals();
  std::vector<ExponentEntry> entries;

  std::size_t defined_count() const;
};

// Entries for every n in [first, last]. Requires first >= 2 and
// last + 1 <= seq.max_index().
ExponentSeries exponent_series(const Sequence& seq, std::size_t first,
                               std::size_t last);

}  // namespace gapscope
