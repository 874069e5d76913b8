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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gapscope/conjectures.hpp"
#include "gapscope/prime_engine.hpp"
#include "gapscope/sequences.hpp"

// Orchestration behind the `gapscope` command line: builds tables, runs the
// analyses and writes deterministic CSV/JSON artifacts plus a manifest.

namespace gapscope::report {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kToolVersion = GAPSCOPE_VERSION;

// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

// "A..B", both ends inclusive. ConfigError on malformed input.
IndexRange parse_range(std::string_view text);

// "dyadic:K1..K2" -> 2^K1, 2^{K1+1}, ..., 2^K2; otherwise a comma list.
std::vector<std::size_t> parse_ns(std::string_view text);

std::uint32_t file_crc32(const std::filesystem::path& path);

struct OutputFile {
  std::string path;  // relative to the output directory
  std::uint32_t crc32 = 0;
};

struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::size_t table_count = 0;
  std::string tool_version = kToolVersion;
  std::vector<OutputFile> outputs;

  std::string to_json() const;
};

// Recomputes every listed checksum; false if a file is missing or differs.
bool verify_manifest(const RunManifest& manifest, const std::filesystem::path& dir);

struct Context {
  std::filesystem::path out_dir = ".";
  std::filesystem::path cache_dir;  // empty: default_cache_dir()
  std::ostream* log = nullptr;      // progress/summary text; null silences it
};

// Table of `count` primes through the on-disk cache; a corrupt cache file
// is rebuilt.
PrimeTable obtain_table(std::size_t count, const Context& ctx);

inline constexpr std::size_t kPublishedN = 1048576;

struct PublishedValue {
  const char* field;
  double value;
  double tolerance;
  bool relative;
};

// The six constants printed for n = 2^20 plus the two right-hand sides.
inline constexpr PublishedValue kPublishedValues[] = {
    {"eq14_lhs", 1.00001322082067, 1e-13, false},
    {"eq14_rhs", 1.00001322082781, 1e-11, false},
    {"eq15_lhs", 1.00001583690296, 1e-13, false},
    {"eq15_rhs", 1.00001576516749, 1e-10, false},
    {"mean_a", 1.79186115958409, 1e-5, true},
    {"median_a", 1.79480436734964, 1e-5, true},
    {"mean_b", 1.80732285747314, 1e-5, true},
    {"median_b", 1.81025121723487, 1e-5, true},
};

struct Reproduction {
  std::size_t n = 0;
  double eq14_lhs = 0, eq14_rhs = 0, eq15_lhs = 0, eq15_rhs = 0;
  double mean_a = 0, median_a = 0, mean_b = 0, median_b = 0;
  IndexRange a_range, b_range;
  std::size_t a_undefined = 0, b_undefined = 0;

  double field(std::string_view name) const;
  bool comparable() const { return n == kPublishedN; }
  // Fields outside tolerance; empty when not comparable.
  std::vector<std::string> failures() const;
  std::string to_json() const;
};

// a-series over [2, n-1], b-series over [3, n]. Table must hold n primes.
Reproduction compute_reproduction(std::size_t n, const PrimeTable& table);

int cmd_reproduce(std::size_t n, const Context& ctx);

struct ConjecturesOptions {
  IndexRange range;
  std::optional<std::string> form;  // only this gap bound when set
  ConjectureConfig config;
  bool all_rows = false;
};

int cmd_conjectures(const ConjecturesOptions& opts, const Context& ctx);

int cmd_equidist(const SequenceKind& kind, const std::vector<std::size_t>& ns,
                 const Context& ctx);

int cmd_exponents(const SequenceKind& kind, IndexRange range, const Context& ctx);

int cmd_primes(std::size_t count, const std::optional<std::filesystem::path>& save,
               const Context& ctx);

}  // namespace gapscope::report
