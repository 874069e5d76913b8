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
#include <span>
#include <vector>

namespace gapscope {

inline constexpr std::size_t kMaxPrimeCount = std::size_t{1} << 26;
inline constexpr std::size_t kDefaultSegmentBytes = std::size_t{1} << 18;

// The first N primes, addressed 1-based (prime(1) == 2). Immutable once
// built, so a table can be shared freely between readers.
class PrimeTable {
 public:
  // Validates that `primes` is non-empty, starts at 2 and is strictly
  // increasing. `limit` is the bound up to which the table is complete.
  PrimeTable(std::vector<std::uint64_t> primes, std::uint64_t limit);

  std::size_t count() const noexcept { return primes_.size(); }
  std::uint64_t limit() const noexcept { return limit_; }

  // p_n for 1 <= n <= count(); IndexError otherwise.
  std::uint64_t prime(std::size_t n) const;

  // p_{n+1} - p_n for 1 <= n < count(); IndexError otherwise.
  std::uint64_t gap(std::size_t n) const;

  // Zero-based view: values()[n - 1] == prime(n).
  std::span<const std::uint64_t> values() const noexcept { return primes_; }

  // Number of stored primes <= x.
  std::size_t pi(std::uint64_t x) const;

  friend bool operator==(const PrimeTable&, const PrimeTable&) = default;

 private:
  std::vector<std::uint64_t> primes_;
  std::uint64_t limit_;
};

// Upper estimate for p_count: count*(ln count + ln ln count) for count >= 6,
// 16 below that.
std::uint64_t prime_bound(std::size_t count);

// All primes <= limit via a segmented, odd-only sieve of Eratosthenes.
std::vector<std::uint64_t> sieve_up_to(
    std::uint64_t limit, std::size_t segment_bytes = kDefaultSegmentBytes);

// First `count` primes. Throws CapacityError unless 1 <= count <= 2^26.
PrimeTable primes_first(std::size_t count);

// Cache file, little-endian:
//   "PGC1" | version 0x01 | count u64 | first prime u64 |
//   (count-1) gaps u16 | CRC32 of all preceding bytes u32
inline constexpr char kCacheMagic[4] = {'P', 'G', 'C', '1'};
inline constexpr std::uint8_t kCacheVersion = 0x01;

std::vector<std::uint8_t> encode_cache(const PrimeTable& table);
PrimeTable decode_cache(std::span<const std::uint8_t> bytes);

void save_cache(const PrimeTable& table, const std::filesystem::path& path);
PrimeTable load_cache(const std::filesystem::path& path);

// $GAPSCOPE_CACHE_DIR, else $XDG_CACHE_HOME/gapscope, else
// $HOME/.cache/gapscope, else a directory under the system temp dir.
std::filesystem::path default_cache_dir();

std::filesystem::path cache_file_for(const std::filesystem::path& dir,
                                     std::size_t count);

enum class CacheOutcome { kHit, kMiss, kRebuilt };

struct CachedTable {
  PrimeTable table;
  CacheOutcome outcome;
};

// Loads the cached table for `count` from `dir`, or sieves and writes it.
// A cache file that fails to decode is replaced (outcome kRebuilt); a
// directory that cannot be written is tolerated.
CachedTable load_or_build(std::size_t count, const std::filesystem::path& dir);

}  // namespace gapscope
