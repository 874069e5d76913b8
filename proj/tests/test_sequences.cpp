#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "gapscope/error.hpp"
#include "gapscope/sequences.hpp"
#include "mp_oracle.hpp"

namespace gapscope {
namespace {

const PrimeTable& table() {
  static const PrimeTable t = primes_first(1 << 20);
  return t;
}

TEST(SequenceKind, ParseAndName) {
  EXPECT_EQ(SequenceKind::parse("naturals"), SequenceKind::naturals());
  EXPECT_EQ(SequenceKind::parse("primes"), SequenceKind::primes());
  const SequenceKind c = SequenceKind::parse("combo:1,0.5");
  EXPECT_EQ(c.variant(), SequenceKind::Variant::kCombo);
  EXPECT_EQ(c.alpha(), 1.0);
  EXPECT_EQ(c.beta(), 0.5);
  EXPECT_EQ(c.name(), "combo:1,0.5");
  EXPECT_EQ(SequenceKind::parse(c.name()), c);
}

TEST(SequenceKind, RejectsBadCombos) {
  EXPECT_THROW(SequenceKind::combo(0, 0), ConfigError);
  EXPECT_THROW(SequenceKind::combo(-1, 2), ConfigError);
  EXPECT_THROW(SequenceKind::combo(1, -0.5), ConfigError);
  EXPECT_THROW(SequenceKind::parse("combo:1"), ConfigError);
  EXPECT_THROW(SequenceKind::parse("combo:a,b"), ConfigError);
  EXPECT_THROW(SequenceKind::parse("squares"), ConfigError);
}

TEST(Term, Examples) {
  EXPECT_EQ(term(SequenceKind::naturals(), 7, table()), 7.0);
  EXPECT_EQ(term(SequenceKind::primes(), 4, table()), 7.0);
  EXPECT_EQ(term(SequenceKind::combo(1, 1), 4, table()), 11.0);
  EXPECT_THROW(term(SequenceKind::primes(), table().count() + 1, table()), IndexError);
  EXPECT_THROW(term(SequenceKind::primes(), 0, table()), IndexError);
}

TEST(Term, NaturalsNeedNoTable) {
  const Sequence nat(SequenceKind::naturals(), nullptr);
  EXPECT_EQ(nat.term(5000000), 5000000.0);
  EXPECT_THROW(Sequence(SequenceKind::primes(), nullptr), ConfigError);
}

TEST(Term, StepMatchesDifferenceOfTerms) {
  const Sequence combo(SequenceKind::combo(2, 3), &table());
  for (std::size_t r = 1; r < 1000; ++r) {
    EXPECT_EQ(combo.step(r), combo.term(r + 1) - combo.term(r));
  }
}

TEST(Exponent, FrozenOracleValues) {
  // sqrt(3)/5^{1/3} and 3^{1/3}/4^{1/4}, 60-digit evaluation.
  const auto a2 = exponent(SequenceKind::primes(), 2, table());
  ASSERT_TRUE(a2.has_value());
  EXPECT_NEAR(*a2, 6.2754278748457989, 1e-12);
  const auto b3 = exponent(SequenceKind::naturals(), 3, table());
  ASSERT_TRUE(b3.has_value());
  EXPECT_NEAR(*b3, 3.5689016298670630, 1e-12);
  EXPECT_NEAR(*a2, oracle::exponent(2, 3, 5), 1e-12);
  EXPECT_NEAR(*b3, oracle::exponent(3, 3, 4), 1e-12);
}

TEST(Exponent, DomainError) {
  EXPECT_THROW(exponent(SequenceKind::primes(), 1, table()), DomainError);
  EXPECT_THROW(exponent(SequenceKind::naturals(), 0, table()), DomainError);
}

TEST(Exponent, UndefinedWhereTheRootIncreases) {
  // 2^{1/2} < 3^{1/3}: b_2 is undefined.
  EXPECT_FALSE(exponent(SequenceKind::naturals(), 2, table()).has_value());
}

TEST(ExponentAsymptote, Values) {
  EXPECT_NEAR(exponent_asymptote(16), 1.6321915932362244, 1e-12);
  EXPECT_NEAR(exponent_asymptote(1048576), 1.8103419139028768, 1e-12);
  EXPECT_NEAR(exponent_asymptote(1048576), 1.81035, 1e-4);
  EXPECT_NEAR(exponent_asymptote(3), 1.9143939781242418, 1e-12);
  EXPECT_THROW(exponent_asymptote(2), DomainError);
}

TEST(ExponentSeries, NaturalsDefinedAndPositiveFrom3) {
  const Sequence nat(SequenceKind::naturals(), nullptr);
  const ExponentSeries s = exponent_series(nat, 3, 1 << 20);
  EXPECT_EQ(s.defined_count(), s.entries.size());
  for (const auto& e : s.entries) ASSERT_GT(*e.value, 0.0) << e.n;
}

TEST(ExponentSeries, PrimesDefinedBelow2To20) {
  const Sequence pr(SequenceKind::primes(), &table());
  const ExponentSeries s = exponent_series(pr, 2, (1 << 20) - 1);
  EXPECT_EQ(s.defined_count(), s.entries.size());
  EXPECT_THROW(exponent_series(pr, 2, 1 << 20), IndexError);
  EXPECT_THROW(exponent_series(pr, 1, 10), DomainError);
}

TEST(ExponentSeries, EntriesMatchPointwiseExponent) {
  const Sequence pr(SequenceKind::combo(1, 1), &table());
  const ExponentSeries s = exponent_series(pr, 2, 500);
  for (const auto& e : s.entries) {
    EXPECT_EQ(e.value, exponent(pr, e.n));
    EXPECT_EQ(e.s_next, pr.term(e.n + 1));
  }
}

TEST(ExponentSeries, AgreesWithOracleOnSampledPrimes) {
  const Sequence pr(SequenceKind::primes(), &table());
  for (std::size_t n : {2u, 3u, 10u, 97u, 4096u, 77777u, 1000000u}) {
    const double want = oracle::exponent(n, pr.term(n), pr.term(n + 1));
    EXPECT_NEAR(*exponent(pr, n), want, 1e-9 * want) << n;
  }
}

// Median |e_n - asymptote(n)| over [2^k, 2^{k+1}).
std::vector<double> block_medians(const Sequence& seq, unsigned k_lo, unsigned k_hi) {
  std::vector<double> out;
  for (unsigned k = k_lo; k <= k_hi; ++k) {
    std::vector<double> d;
    for (std::size_t n = std::size_t{1} << k; n < (std::size_t{1} << (k + 1)); ++n) {
      d.push_back(std::fabs(*exponent(seq, n) - exponent_asymptote(n)));
    }
    std::sort(d.begin(), d.end());
    out.push_back((d[d.size() / 2 - 1] + d[d.size() / 2]) / 2);
  }
  return out;
}

TEST(ExponentSeries, DeviationFromAsymptoteShrinksByBlock) {
  const Sequence nat(SequenceKind::naturals(), nullptr);
  const Sequence pr(SequenceKind::primes(), &table());
  for (const Sequence* seq : {&nat, &pr}) {
    const auto med = block_medians(*seq, 10, 19);
    for (std::size_t i = 1; i < med.size(); ++i) {
      EXPECT_LT(med[i], med[i - 1]) << seq->kind().name() << " block 2^" << 10 + i;
    }
  }
}

}  // namespace
}  // namespace gapscope
