// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gapscope/conjectures.hpp"
#include "gapscope/equidist.hpp"
#include "gapscope/numerics.hpp"
#include "gapscope/prime_engine.hpp"
#include "gapscope/report.hpp"
#include "gapscope/sequences.hpp"
#include "gapscope/stats.hpp"

namespace fs = std::filesystem;
using namespace gapscope;

namespace {

constexpr std::size_t kN = 1 << 20;

// 60-digit reference values computed with mpmath.
constexpr double kGammaRef = 0.577215664901532860606512090082402431042;
constexpr double kMertensRef = 0.261497212847642783755426838608695859051;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!out.pass) ++failures;
  std::printf("%s [%d] %s: %s (%.2f s, budget %.0f s)\n", out.pass ? "PASS" : "FAIL", id,
              title, out.detail.c_str(), secs, budget_s);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

bool within(double got, double want, double tol, bool relative) {
  const double lim = relative ? tol * std::fabs(want) : tol;
  return std::fabs(got - want) <= lim;
}

const report::PublishedValue& published(const char* field) {
  for (const auto& pv : report::kPublishedValues) {
    if (std::string(pv.field) == field) return pv;
  }
  throw std::logic_error(field);
}

Outcome check_fields(const report::Reproduction& rep, std::initializer_list<const char*> fields) {
  Outcome out{true, ""};
  for (const char* f : fields) {
    const auto& pv = published(f);
    const double got = rep.field(f);
    const bool ok = within(got, pv.value, pv.tolerance, pv.relative);
    out.pass = out.pass && ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s=%.15g (|diff| %.2e, tol %.0e%s)",
                  out.detail.empty() ? "" : "; ", f, got, std::fabs(got - pv.value),
                  pv.tolerance, pv.relative ? " rel" : "");
    out.detail += buf;
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

int main() {
  std::optional<PrimeTable> table;

  criterion(1, "naturals mean identity at n=2^20", 5, [] {
    const auto m = check_mean_formula(Sequence(SequenceKind::naturals(), nullptr), kN);
    report::Reproduction rep;
    rep.n = kN;
    rep.eq14_lhs = m.lhs;
    rep.eq14_rhs = m.rhs;
    return check_fields(rep, {"eq14_lhs", "eq14_rhs"});
  });

  criterion(2, "primes mean identity at n=2^20 (sieve included)", 10, [&] {
    table = primes_first(kN + 1);
    const auto m = check_mean_formula(Sequence(SequenceKind::primes(), &*table), kN);
    report::Reproduction rep;
    rep.n = kN;
    rep.eq15_lhs = m.lhs;
    rep.eq15_rhs = m.rhs;
    return check_fields(rep, {"eq15_lhs", "eq15_rhs"});
  });

  criterion(3, "exponent mean/median of a- and b-series", 10, [&] {
    const auto rep = report::compute_reproduction(kN, *table);
    Outcome out = check_fields(rep, {"mean_a", "median_a", "mean_b", "median_b"});
    out.detail += "; a over [" + std::to_string(rep.a_range.first) + "," +
                  std::to_string(rep.a_range.last) + "], b over [" +
                  std::to_string(rep.b_range.first) + "," + std::to_string(rep.b_range.last) +
                  "]";
    return out;
  });

  criterion(4, "Firoozbakht scan on [2, 2^20)", 5, [&] {
    const auto rep = check_firoozbakht(*table, {2, kN - 1});
    return Outcome{rep.violations.empty() && rep.tested == kN - 2,
                   std::to_string(rep.violations.size()) + " violations in " +
                       std::to_string(rep.tested) + " indices"};
  });

  criterion(5, "gap-bound scans", 5, [&] {
    const auto eq10 = check_gap_bound(*table, {1, kN - 1}, GapBound::eq10());
    const auto cg = check_gap_bound(*table, {5, kN - 1}, GapBound::cramer_granville(1.2));
    bool below = true;
    for (std::size_t v : eq10.violations) below = below && v <= eq10.threshold_index;
    const bool ok = below && eq10.threshold_index < 10 && cg.violations.empty();
    return Outcome{ok, "eq10 threshold " + std::to_string(eq10.threshold_index) + " (" +
                           std::to_string(eq10.violations.size()) +
                           " violations); cramer_granville M=1.2 on [5,2^20): " +
                           std::to_string(cg.violations.size()) + " violations"};
  });

  criterion(6, "equidistribution decay", 10, [&] {
    const Sequence primes(SequenceKind::primes(), &*table);
    const Sequence naturals(SequenceKind::naturals(), nullptr);
    const unsigned hs[] = {1};
    bool ok = true;
    double prev = 2.0;
    std::string detail = "D*:";
    for (unsigned k = 12; k <= 20; k += 2) {
      const std::size_t n = std::size_t{1} << k;
      const auto rep = discrepancy_report(primes, n, hs);
      ok = ok && rep.star_discrepancy < prev && rep.riemann[1].abs_error <= rep.star_discrepancy;
      prev = rep.star_discrepancy;
      detail += fmt(" %.5f", rep.star_discrepancy);
      const auto nat = discrepancy_report(naturals, n, hs);
      ok = ok && nat.star_discrepancy == 1.0 / static_cast<double>(n) &&
           nat.riemann[1].abs_error <= nat.star_discrepancy;
    }
    ok = ok && prev <= 0.05;
    return Outcome{ok, detail + "; naturals exactly 1/n; Koksma holds"};
  });

  criterion(7, "ratio_minus_one against checked-in high-precision fixture", 5, [&] {
    std::ifstream in(fs::path(GAPSCOPE_FIXTURE_DIR) / "ratio_oracle.csv");
    if (!in) return Outcome{false, "fixture missing"};
    std::string line;
    std::getline(in, line);
    std::size_t rows = 0;
    double worst = 0.0;
    bool primes_match = true;
    while (std::getline(in, line)) {
      std::istringstream cells(line);
      std::string n_s, p_s, q_s, r_s;
      std::getline(cells, n_s, ',');
      std::getline(cells, p_s, ',');
      std::getline(cells, q_s, ',');
      std::getline(cells, r_s, ',');
      const std::size_t n = std::stoull(n_s);
      primes_match = primes_match && table->prime(n) == std::stoull(p_s) &&
                     table->prime(n + 1) == std::stoull(q_s);
      const double want = std::stod(r_s);
      const double got = ratio_minus_one(n, static_cast<double>(table->prime(n)),
                                         static_cast<double>(table->prime(n + 1)));
      worst = std::max(worst, std::fabs(got - want) / std::fabs(want));
      ++rows;
    }
    return Outcome{rows == 100 && primes_match && worst <= 1e-9,
                   std::to_string(rows) + " samples, worst relative error " +
                       fmt("%.2e", worst) + (primes_match ? "" : ", prime mismatch")};
  });

  criterion(8, "harmonic analogies at n=2^20", 5, [&] {
    const auto h = check_harmonic_analogy(*table, kN);
    const double dg = std::fabs(h.gamma_est - kGammaRef);
    const double dm = std::fabs(h.mertens_est - kMertensRef);
    return Outcome{dg <= 1e-6 && dm <= 0.02,
                   fmt("gamma_est %.12f (|diff| %.2e), mertens_est %.8f", h.gamma_est, dg,
                       h.mertens_est) +
                       fmt(" (|diff| %.2e)", dm)};
  });

  criterion(9, "reproduce is byte-identical across runs", 20, [] {
    std::random_device rd;
    const fs::path root = fs::temp_directory_path() / ("gapscope-accept-" + std::to_string(rd()));
    report::Context a, b;
    a.out_dir = root / "a";
    b.out_dir = root / "b";
    a.cache_dir = b.cache_dir = root / "cache";
    const int ra = report::cmd_reproduce(kN, a);
    const int rb = report::cmd_reproduce(kN, b);
    const std::string ja = slurp(a.out_dir / "reproduce.json");
    const std::string jb = slurp(b.out_dir / "reproduce.json");
    std::error_code ec;
    fs::remove_all(root, ec);
    const bool same = !ja.empty() && ja == jb;
    return Outcome{same && ra == report::kExitOk && rb == report::kExitOk,
                   std::string(same ? "identical" : "differ") + ", " +
                       std::to_string(ja.size()) + " bytes, exit codes " +
                       std::to_string(ra) + "/" + std::to_string(rb)};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
