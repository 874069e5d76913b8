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

#include "gapscope/report.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "gapscope/equidist.hpp"
#include "gapscope/error.hpp"
#include "gapscope/stats.hpp"
#include "json.hpp"

namespace gapscope::report {

using nlohmann::json;

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::size_t parse_size(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("bad " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

IndexRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    throw ConfigError("range must look like A..B, got '" + std::string(text) + "'");
  }
  IndexRange r{parse_size(text.substr(0, dots), "range start"),
               parse_size(text.substr(dots + 2), "range end")};
  if (r.first > r.last) throw ConfigError("range start exceeds range end");
  return r;
}

std::vector<std::size_t> parse_ns(std::string_view text) {
  std::vector<std::size_t> ns;
  constexpr std::string_view dyadic = "dyadic:";
  if (text.starts_with(dyadic)) {
    const IndexRange k = parse_range(text.substr(dyadic.size()));
    if (k.last > 40) throw ConfigError("dyadic exponent too large");
    for (std::size_t e = k.first; e <= k.last; ++e) ns.push_back(std::size_t{1} << e);
    return ns;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start);
    ns.push_back(parse_size(piece, "n"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ns;
}

std::uint32_t file_crc32(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  uLong crc = crc32(0L, Z_NULL, 0);
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    const auto got = in.gcount();
    if (got > 0) {
      crc = crc32(crc, reinterpret_cast<const Bytef*>(buf.data()), static_cast<uInt>(got));
    }
  }
  return static_cast<std::uint32_t>(crc);
}

std::string RunManifest::to_json() const {
  json params = json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  json outs = json::array();
  for (const auto& o : outputs) outs.push_back({{"path", o.path}, {"crc32", o.crc32}});
  const json j = {{"command", command},
                  {"parameters", params},
                  {"table_count", table_count},
                  {"tool_version", tool_version},
                  {"outputs", outs}};
  return j.dump(2) + "\n";
}

bool verify_manifest(const RunManifest& manifest, const std::filesystem::path& dir) {
  for (const auto& o : manifest.outputs) {
    std::error_code ec;
    if (!std::filesystem::exists(dir / o.path, ec)) return false;
    if (file_crc32(dir / o.path) != o.crc32) return false;
  }
  return true;
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("write to " + path.string() + " failed");
}

class RunWriter {
 public:
  RunWriter(const Context& ctx, std::string command) : ctx_(ctx) {
    manifest_.command = std::move(command);
    std::filesystem::create_directories(ctx_.out_dir);
  }

  void param(std::string key, std::string value) {
    manifest_.parameters.emplace_back(std::move(key), std::move(value));
  }
  void table_count(std::size_t n) { manifest_.table_count = n; }

  void output(const std::string& name, const std::string& text) {
    const auto path = ctx_.out_dir / name;
    write_text(path, text);
    manifest_.outputs.push_back({name, file_crc32(path)});
  }

  void finish() {
    write_text(ctx_.out_dir / "manifest.json", manifest_.to_json());
    if (!verify_manifest(manifest_, ctx_.out_dir)) {
      throw Error("output files do not match the run manifest");
    }
  }

 private:
  const Context& ctx_;
  RunManifest manifest_;
};

std::ostream* log_of(const Context& ctx) { return ctx.log; }

template <typename... Args>
void say(const Context& ctx, const Args&... args) {
  if (std::ostream* os = log_of(ctx)) {
    ((*os) << ... << args);
    (*os) << '\n';
  }
}

}  // namespace

PrimeTable obtain_table(std::size_t count, const Context& ctx) {
  const auto dir = ctx.cache_dir.empty() ? default_cache_dir() : ctx.cache_dir;
  CachedTable cached = load_or_build(count, dir);
  if (cached.outcome == CacheOutcome::kRebuilt) {
    say(ctx, "warning: cache file for ", count,
        " primes was unreadable; regenerated it");
  }
  return std::move(cached.table);
}

double Reproduction::field(std::string_view name) const {
  if (name == "eq14_lhs") return eq14_lhs;
  if (name == "eq14_rhs") return eq14_rhs;
  if (name == "eq15_lhs") return eq15_lhs;
  if (name == "eq15_rhs") return eq15_rhs;
  if (name == "mean_a") return mean_a;
  if (name == "median_a") return median_a;
  if (name == "mean_b") return mean_b;
  if (name == "median_b") return median_b;
  throw ConfigError("unknown reproduction field '" + std::string(name) + "'");
}

std::vector<std::string> Reproduction::failures() const {
  std::vector<std::string> bad;
  if (!comparable()) return bad;
  for (const auto& pv : kPublishedValues) {
    const double diff = std::fabs(field(pv.field) - pv.value);
    const double allowed = pv.relative ? pv.tolerance * std::fabs(pv.value) : pv.tolerance;
    if (!(diff <= allowed)) bad.emplace_back(pv.field);
  }
  return bad;
}

std::string Reproduction::to_json() const {
  json j;
  j["n"] = n;
  for (const auto& pv : kPublishedValues) j[pv.field] = field(pv.field);
  j["a_range"] = {a_range.first, a_range.last};
  j["b_range"] = {b_range.first, b_range.last};
  j["a_undefined"] = a_undefined;
  j["b_undefined"] = b_undefined;
  if (comparable()) {
    json published = json::object();
    json diffs = json::object();
    json tol = json::object();
    for (const auto& pv : kPublishedValues) {
      published[pv.field] = pv.value;
      diffs[pv.field] = std::fabs(field(pv.field) - pv.value);
      tol[pv.field] = {{"tolerance", pv.tolerance},
                       {"kind", pv.relative ? "relative" : "absolute"}};
    }
    j["paper_values"] = published;
    j["abs_diffs"] = diffs;
    j["tolerances"] = tol;
    j["failures"] = failures();
    j["pass"] = failures().empty();
  } else {
    j["paper_values"] = "not comparable";
    j["abs_diffs"] = "not comparable";
  }
  return j.dump(2) + "\n";
}

Reproduction compute_reproduction(std::size_t n, const PrimeTable& table) {
  if (n < 4) throw ConfigError("reproduce needs n >= 4");
  if (table.count() < n) throw IndexError("prime table too small for reproduce");
  const Sequence naturals(SequenceKind::naturals(), nullptr);
  const Sequence primes(SequenceKind::primes(), &table);

  Reproduction out;
  out.n = n;
  const auto eq14 = check_mean_formula(naturals, n);
  const auto eq15 = check_mean_formula(primes, n);
  out.eq14_lhs = eq14.lhs;
  out.eq14_rhs = eq14.rhs;
  out.eq15_lhs = eq15.lhs;
  out.eq15_rhs = eq15.rhs;

  out.a_range = {2, n - 1};
  const ExponentSeries a = exponent_series(primes, out.a_range.first, out.a_range.last);
  const SampleStats sa = summarize(a);
  out.mean_a = sa.mean;
  out.median_a = sa.median;
  out.a_undefined = sa.count - sa.defined_count;

  out.b_range = {3, n};
  const ExponentSeries b = exponent_series(naturals, out.b_range.first, out.b_range.last);
  const SampleStats sb = summarize(b);
  out.mean_b = sb.mean;
  out.median_b = sb.median;
  out.b_undefined = sb.count - sb.defined_count;
  return out;
}

int cmd_reproduce(std::size_t n, const Context& ctx) {
  RunWriter run(ctx, "reproduce");
  run.param("n", std::to_string(n));
  const PrimeTable table = obtain_table(n, ctx);
  run.table_count(table.count());

  const Reproduction rep = compute_reproduction(n, table);
  run.output("reproduce.json", rep.to_json());
  run.finish();

  if (!rep.comparable()) {
    say(ctx, "n = ", n, ": published values refer to n = ", kPublishedN, "; not comparable");
    return kExitOk;
  }
  const auto bad = rep.failures();
  for (const auto& pv : kPublishedValues) {
    say(ctx, pv.field, " = ", format_double(rep.field(pv.field)), "  (published ",
        format_double(pv.value), ")");
  }
  if (!bad.empty()) {
    for (const auto& f : bad) say(ctx, "FAIL: ", f, " outside tolerance");
    return kExitFail;
  }
  return kExitOk;
}

namespace {

void append_rows(std::string& csv, const ConjectureReport& rep, bool all_rows) {
  auto line = [&](std::size_t n, double lhs, double rhs, bool violated) {
    csv += rep.name;
    csv += ',';
    csv += std::to_string(n);
    csv += ',';
    csv += format_double(lhs);
    csv += ',';
    csv += format_double(rhs);
    csv += violated ? ",1\n" : ",0\n";
  };
  if (all_rows) {
    for (const auto& r : rep.rows) line(r.n, r.lhs, r.rhs, r.violated);
    return;
  }
  // Violation rows plus the extremal witness, in index order.
  std::vector<CheckRow> picked = rep.rows;
  if (const auto& w = rep.max_margin_witness) {
    const bool listed = std::any_of(picked.begin(), picked.end(),
                                    [&](const CheckRow& r) { return r.n == w->n; });
    if (!listed) {
      picked.push_back({w->n, w->lhs, w->rhs, false});
      std::sort(picked.begin(), picked.end(),
                [](const CheckRow& a, const CheckRow& b) { return a.n < b.n; });
    }
  }
  for (const auto& r : picked) line(r.n, r.lhs, r.rhs, r.violated);
}

void summarize_check(const Context& ctx, const ConjectureReport& rep) {
  std::ostringstream w;
  if (rep.max_margin_witness) {
    w << " witness n=" << rep.max_margin_witness->n
      << " lhs=" << format_double(rep.max_margin_witness->lhs)
      << " rhs=" << format_double(rep.max_margin_witness->rhs);
  }
  say(ctx, rep.name, ": tested ", rep.tested, ", violations ", rep.violations.size(),
      ", threshold_index ", rep.threshold_index, w.str());
}

}  // namespace

int cmd_conjectures(const ConjecturesOptions& opts, const Context& ctx) {
  opts.config.validate();
  const IndexRange range = opts.range;
  if (range.first < 1 || range.first > range.last) {
    throw ConfigError("conjecture range must satisfy 1 <= A <= B");
  }
  std::optional<GapBound> only;
  if (opts.form) only = parse_gap_form(*opts.form, opts.config);

  RunWriter run(ctx, "conjectures");
  run.param("range", std::to_string(range.first) + ".." + std::to_string(range.last));
  run.param("form", opts.form.value_or("all"));
  run.param("eps", format_double(opts.config.eps));
  run.param("c", format_double(opts.config.c));
  run.param("c0", format_double(opts.config.c0));
  run.param("M", format_double(opts.config.cramer_m));
  run.param("all_rows", opts.all_rows ? "1" : "0");

  const PrimeTable table = obtain_table(range.last + 1, ctx);
  run.table_count(table.count());
  const ScanOptions scan{opts.all_rows ? ScanOptions::Rows::kAll
                                       : ScanOptions::Rows::kViolations};

  std::vector<ConjectureReport> reports;
  if (only) {
    reports.push_back(check_gap_bound(table, range, *only, scan));
  } else {
    reports.push_back(check_firoozbakht(table, range, scan));
    for (const auto& b : {GapBound::eq10(), GapBound::eq27(),
                          GapBound::cramer_granville(opts.config.cramer_m),
                          GapBound::eq20(opts.config.eps), GapBound::eq28(opts.config.c)}) {
      reports.push_back(check_gap_bound(table, range, b, scan));
    }
    const IndexRange sandwich_range{std::max<std::size_t>(range.first, 2), range.last};
    if (sandwich_range.first <= sandwich_range.last) {
      reports.push_back(check_sandwich(table, sandwich_range, opts.config.eps, scan).report);
    }
    reports.push_back(check_lemma22_hypothesis(table, range, opts.config.c0, scan));

    std::vector<std::size_t> samples;
    for (std::size_t p = 1024; p <= range.last; p <<= 1) {
      if (p >= range.first) samples.push_back(p);
    }
    if (!samples.empty()) {
      const Sequence primes(SequenceKind::primes(), &table);
      reports.push_back(check_h_ratio(primes, samples, opts.config.c, scan));
    }
  }

  std::string csv = "name,n,lhs,rhs,violated\n";
  bool any_violation = false;
  for (const auto& rep : reports) {
    append_rows(csv, rep, opts.all_rows);
    summarize_check(ctx, rep);
    any_violation = any_violation || !rep.violations.empty();
  }
  const CramerExtremes ext = cramer_ratio_extremes(table, range);
  say(ctx, "cramer ratio: max ", format_double(ext.max_ratio), " at n=", ext.argmax_n,
      ext.exceeds_granville ? " (exceeds " : " (below ", "2e^-gamma = ",
      format_double(granville_limit()), ")");

  run.output("conjectures.csv", csv);
  run.finish();
  return any_violation ? kExitFail : kExitOk;
}

int cmd_equidist(const SequenceKind& kind, const std::vector<std::size_t>& ns,
                 const Context& ctx) {
  if (ns.empty()) throw ConfigError("equidist needs at least one n");
  std::size_t max_n = 0;
  for (std::size_t n : ns) {
    if (n < 2) throw ConfigError("equidist needs every n >= 2");
    max_n = std::max(max_n, n);
  }
  RunWriter run(ctx, "equidist");
  run.param("kind", kind.name());
  std::string ns_text;
  for (std::size_t n : ns) ns_text += (ns_text.empty() ? "" : ",") + std::to_string(n);
  run.param("ns", ns_text);

  std::optional<PrimeTable> table;
  if (kind.uses_primes()) {
    table = obtain_table(max_n, ctx);
    run.table_count(table->count());
  }
  const Sequence seq(kind, table ? &*table : nullptr);

  const unsigned hs[] = {1, 2};
  std::string csv = "kind,n,star_discrepancy,weyl_h1,weyl_h2,riemann_identity_err\n";
  bool koksma_ok = true;
  for (std::size_t n : ns) {
    const DiscrepancyReport rep = discrepancy_report(seq, n, hs);
    const double identity_err = rep.riemann[1].abs_error;
    koksma_ok = koksma_ok && identity_err <= rep.star_discrepancy;
    csv += kind.name() + "," + std::to_string(n) + "," + format_double(rep.star_discrepancy) +
           "," + format_double(rep.weyl[0].modulus) + "," + format_double(rep.weyl[1].modulus) +
           "," + format_double(identity_err) + "\n";
    say(ctx, kind.name(), " n=", n, " D*=", format_double(rep.star_discrepancy));
  }
  run.output("equidist.csv", csv);
  run.finish();
  if (!koksma_ok) {
    say(ctx, "FAIL: identity Riemann error exceeded the star discrepancy");
    return kExitFail;
  }
  return kExitOk;
}

int cmd_exponents(const SequenceKind& kind, IndexRange range, const Context& ctx) {
  if (range.first < 2 || range.first > range.last) {
    throw ConfigError("exponent range must satisfy 2 <= A <= B");
  }
  RunWriter run(ctx, "exponents");
  run.param("kind", kind.name());
  run.param("range", std::to_string(range.first) + ".." + std::to_string(range.last));

  std::optional<PrimeTable> table;
  if (kind.uses_primes()) {
    table = obtain_table(range.last + 1, ctx);
    run.table_count(table->count());
  }
  const Sequence seq(kind, table ? &*table : nullptr);
  const ExponentSeries series = exponent_series(seq, range.first, range.last);

  std::string csv = "n,s_n,s_next,frac_ratio,exponent,asymptote,defined\n";
  for (const auto& e : series.entries) {
    csv += std::to_string(e.n) + "," + format_double(e.s_n) + "," + format_double(e.s_next) +
           "," + format_double(e.frac_ratio) + "," +
           (e.value ? format_double(*e.value) : std::string()) + "," +
           (e.n >= 3 ? format_double(exponent_asymptote(e.n)) : std::string()) + "," +
           (e.value ? "1" : "0") + "\n";
  }
  run.output("exponents.csv", csv);
  run.finish();
  say(ctx, kind.name(), ": ", series.entries.size(), " exponents, ",
      series.entries.size() - series.defined_count(), " undefined");
  return kExitOk;
}

int cmd_primes(std::size_t count, const std::optional<std::filesystem::path>& save,
               const Context& ctx) {
  const PrimeTable table = obtain_table(count, ctx);
  std::uint64_t max_gap = 0;
  std::size_t max_gap_n = 0;
  for (std::size_t n = 1; n < table.count(); ++n) {
    if (table.gap(n) > max_gap) {
      max_gap = table.gap(n);
      max_gap_n = n;
    }
  }
  if (save) save_cache(table, *save);
  say(ctx, "count ", table.count(), ", p_count ", table.prime(table.count()),
      ", max gap ", max_gap, " after p_", max_gap_n);
  return kExitOk;
}

}  // namespace gapscope::report
