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

#include "gapscope/sequences.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "gapscope/error.hpp"
#include "gapscope/numerics.hpp"

namespace gapscope {

namespace {

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::string format_coeff(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

SequenceKind SequenceKind::combo(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha < 0 || beta < 0) {
    throw ConfigError("combo coefficients must be finite and non-negative");
  }
  if (alpha == 0 && beta == 0) {
    throw ConfigError("combo coefficients must not both be zero");
  }
  return SequenceKind(Variant::kCombo, alpha, beta);
}

SequenceKind SequenceKind::parse(std::string_view text) {
  if (text == "naturals") return naturals();
  if (text == "primes") return primes();
  constexpr std::string_view prefix = "combo:";
  if (text.starts_with(prefix)) {
    const auto rest = text.substr(prefix.size());
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw ConfigError("combo kind needs two coefficients: combo:A,B");
    }
    return combo(parse_double(rest.substr(0, comma)),
                 parse_double(rest.substr(comma + 1)));
  }
  throw ConfigError("unknown sequence kind '" + std::string(text) + "'");
}

std::string SequenceKind::name() const {
  switch (variant_) {
    case Variant::kNaturals:
      return "naturals";
    case Variant::kPrimes:
      return "primes";
    case Variant::kCombo:
      return "combo:" + format_coeff(alpha_) + "," + format_coeff(beta_);
  }
  return {};
}

Sequence::Sequence(SequenceKind kind, const PrimeTable* table)
    : kind_(kind), table_(table) {
  if (kind_.uses_primes() && table_ == nullptr) {
    throw ConfigError("sequence " + kind_.name() + " needs a prime table");
  }
}

std::size_t Sequence::max_index() const noexcept {
  if (!kind_.uses_primes()) return std::numeric_limits<std::size_t>::max() - 1;
  return table_->count();
}

double Sequence::term(std::size_t r) const {
  if (r < 1) throw IndexError("sequence index must be >= 1");
  const double rd = static_cast<double>(r);
  switch (kind_.variant()) {
    case SequenceKind::Variant::kNaturals:
      return rd;
    case SequenceKind::Variant::kPrimes:
      return static_cast<double>(table_->prime(r));
    case SequenceKind::Variant::kCombo:
      return kind_.alpha() * static_cast<double>(table_->prime(r)) + kind_.beta() * rd;
  }
  return 0.0;
}

double Sequence::step(std::size_t r) const {
  switch (kind_.variant()) {
    case SequenceKind::Variant::kNaturals:
      if (r < 1) throw IndexError("sequence index must be >= 1");
      return 1.0;
    case SequenceKind::Variant::kPrimes:
      return static_cast<double>(table_->gap(r));
    case SequenceKind::Variant::kCombo:
      return kind_.alpha() * static_cast<double>(table_->gap(r)) + kind_.beta();
  }
  return 0.0;
}

double term(const SequenceKind& kind, std::size_t r, const PrimeTable& table) {
  return Sequence(kind, &table).term(r);
}

std::optional<double> exponent(const Sequence& seq, std::size_t n) {
  if (n < 2) throw DomainError("exponent needs n >= 2 (ln 1 = 0)");
  const double rm1 = ratio_minus_one_gap(n, seq.term(n), seq.step(n));
  if (!(rm1 > 0.0)) return std::nullopt;
  return -std::log(rm1) / std::log(static_cast<double>(n));
}

std::optional<double> exponent(const SequenceKind& kind, std::size_t n,
                               const PrimeTable& table) {
  return exponent(Sequence(kind, &table), n);
}

double exponent_asymptote(std::size_t n) {
  if (n < 3) throw DomainError("exponent asymptote needs n >= 3");
  const double ln = std::log(static_cast<double>(n));
  return 2.0 - std::log(ln) / ln;
}

std::size_t ExponentSeries::defined_count() const {
  std::size_t k = 0;
  for (const auto& e : entries) k += e.value.has_value();
  return k;
}

ExponentSeries exponent_series(const Sequence& seq, std::size_t first,
                               std::size_t last) {
  if (first < 2) throw DomainError("exponent series needs n >= 2");
  if (last < first) throw DomainError("empty exponent range");
  if (last >= seq.max_index()) {
    throw IndexError("exponent at n = " + std::to_string(last) +
                     " needs term " + std::to_string(last + 1) +
                     ", beyond index " + std::to_string(seq.max_index()));
  }
  ExponentSeries series{seq.kind(), {}};
  series.entries.resize(last - first + 1);
  for (std::size_t n = first; n <= last; ++n) {
    ExponentEntry& e = series.entries[n - first];
    e.n = n;
    e.s_n = seq.term(n);
    const double step = seq.step(n);
    e.s_next = seq.term(n + 1);
    e.frac_ratio = ratio_minus_one_gap(n, e.s_n, step);
    if (e.frac_ratio > 0.0) {
      e.value = -std::log(e.frac_ratio) / std::log(static_cast<double>(n));
    }
  }
  return series;
}

}  // namespace gapscope
