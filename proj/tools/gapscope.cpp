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

#include <cstddef>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gapscope/error.hpp"
#include "gapscope/report.hpp"

namespace rep = gapscope::report;

int main(int argc, char** argv) {
  CLI::App app{"gapscope: prime-gap exponent and equidistribution checks"};
  app.set_version_flag("--version", std::string(rep::kToolVersion));
  app.require_subcommand(1);

  std::string out_dir = ".";
  std::string cache_dir;
  bool quiet = false;
  app.add_option("--out", out_dir, "Directory for CSV/JSON outputs")->capture_default_str();
  app.add_option("--cache-dir", cache_dir,
                 "Prime cache directory (default: $GAPSCOPE_CACHE_DIR or the user cache dir)");
  app.add_flag("-q,--quiet", quiet, "Suppress the summary on stdout");

  auto* reproduce = app.add_subcommand("reproduce", "Reproduce the published constants at n = 2^20");
  std::size_t repro_n = rep::kPublishedN;
  reproduce->add_option("--n", repro_n, "Sequence length")->capture_default_str();

  auto* conjectures = app.add_subcommand("conjectures", "Scan gap-bound inequalities over a range");
  std::string conj_range;
  std::string form;
  rep::ConjecturesOptions conj;
  conjectures->add_option("--range", conj_range, "Index range A..B (inclusive)")->required();
  conjectures->add_option("--form", form, "Only this gap bound")
      ->check(CLI::IsMember({"eq10", "eq27", "cg", "eq20", "eq28"}));
  conjectures->add_option("--eps", conj.config.eps, "eps in (0,1)")->capture_default_str();
  conjectures->add_option("--c", conj.config.c, "c > 1")->capture_default_str();
  conjectures->add_option("--c0", conj.config.c0, "c0 > 0")->capture_default_str();
  conjectures->add_option("--M", conj.config.cramer_m, "Cramer-Granville constant")
      ->capture_default_str();
  conjectures->add_flag("--all-rows", conj.all_rows, "Write every index, not only violations");

  auto* equidist = app.add_subcommand("equidist", "Star discrepancy and Weyl sums of s_r/s_n");
  std::string eq_kind = "primes";
  std::string eq_ns;
  equidist->add_option("--kind", eq_kind, "primes | naturals | combo:A,B")->capture_default_str();
  equidist->add_option("--ns", eq_ns, "dyadic:K1..K2 or a comma list")->required();

  auto* exponents = app.add_subcommand("exponents", "Exponent series e_n over a range");
  std::string ex_kind = "primes";
  std::string ex_range;
  exponents->add_option("--kind", ex_kind, "primes | naturals | combo:A,B")->capture_default_str();
  exponents->add_option("--range", ex_range, "Index range A..B (inclusive)")->required();

  auto* primes = app.add_subcommand("primes", "Build (and optionally save) a prime table");
  std::size_t prime_count = 0;
  std::string save_path;
  primes->add_option("--count", prime_count, "Number of primes")->required();
  primes->add_option("--save", save_path, "Write the table in cache format to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? rep::kExitOk : rep::kExitUsage;
  }

  rep::Context ctx;
  ctx.out_dir = out_dir;
  ctx.cache_dir = cache_dir;
  ctx.log = quiet ? nullptr : &std::cout;

  try {
    if (*reproduce) return rep::cmd_reproduce(repro_n, ctx);
    if (*conjectures) {
      conj.range = rep::parse_range(conj_range);
      if (!form.empty()) conj.form = form;
      return rep::cmd_conjectures(conj, ctx);
    }
    if (*equidist) {
      return rep::cmd_equidist(gapscope::SequenceKind::parse(eq_kind), rep::parse_ns(eq_ns), ctx);
    }
    if (*exponents) {
      return rep::cmd_exponents(gapscope::SequenceKind::parse(ex_kind),
                                rep::parse_range(ex_range), ctx);
    }
    if (*primes) {
      std::optional<std::filesystem::path> save;
      if (!save_path.empty()) save = save_path;
      return rep::cmd_primes(prime_count, save, ctx);
    }
  } catch (const gapscope::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return rep::kExitUsage;
  } catch (const gapscope::CapacityError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return rep::kExitUsage;
  } catch (const gapscope::IndexError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return rep::kExitUsage;
  } catch (const gapscope::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return rep::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return rep::kExitFail;
  }
  return rep::kExitUsage;
}
