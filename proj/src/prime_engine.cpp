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

#include "gapscope/prime_engine.hpp"

#include <zlib.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>
#include <system_error>

#include "gapscope/error.hpp"

namespace gapscope {

PrimeTable::PrimeTable(std::vector<std::uint64_t> primes, std::uint64_t limit)
    : primes_(std::move(primes)), limit_(limit) {
  if (primes_.empty() || primes_.front() != 2) {
    throw DomainError("prime table must start at 2");
  }
  if (std::adjacent_find(primes_.begin(), primes_.end(),
                         std::greater_equal<>()) != primes_.end()) {
    throw MonotonicityError("prime table must be strictly increasing");
  }
  if (limit_ < primes_.back()) {
    throw DomainError("prime table limit below its largest prime");
  }
}

std::uint64_t PrimeTable::prime(std::size_t n) const {
  if (n < 1 || n > primes_.size()) {
    throw IndexError("prime index " + std::to_string(n) + " outside [1, " +
                     std::to_string(primes_.size()) + "]");
  }
  return primes_[n - 1];
}

std::uint64_t PrimeTable::gap(std::size_t n) const {
  if (n < 1 || n >= primes_.size()) {
    throw IndexError("gap index " + std::to_string(n) + " outside [1, " +
                     std::to_string(primes_.size()) + ")");
  }
  return primes_[n] - primes_[n - 1];
}

std::size_t PrimeTable::pi(std::uint64_t x) const {
  return static_cast<std::size_t>(
      std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

std::uint64_t prime_bound(std::size_t count) {
  if (count < 6) return 16;
  const double n = static_cast<double>(count);
  return static_cast<std::uint64_t>(std::ceil(n * (std::log(n) + std::log(std::log(n)))));
}

namespace {

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Odd primes <= limit by a plain sieve; only used for the base primes.
std::vector<std::uint64_t> small_odd_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 3) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 3; i <= limit; i += 2) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += 2 * i) composite[j] = true;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> sieve_up_to(std::uint64_t limit,
                                       std::size_t segment_bytes) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  if (segment_bytes == 0) throw ConfigError("segment size must be positive");

  const double est = static_cast<double>(limit) / std::log(static_cast<double>(limit) + 1.0);
  out.reserve(static_cast<std::size_t>(est * 1.2) + 16);
  out.push_back(2);

  const std::vector<std::uint64_t> base = small_odd_primes(isqrt(limit));
  // next[i]: next odd multiple of base[i] still to be crossed off.
  std::vector<std::uint64_t> next(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) next[i] = base[i] * base[i];

  // Flag j of a segment starting at `low` (odd) stands for low + 2j.
  std::vector<std::uint8_t> flags(segment_bytes);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(segment_bytes);
  for (std::uint64_t low = 3; low <= limit; low += span) {
    const std::uint64_t high = std::min(limit + 1, low + span);  // exclusive
    const std::size_t len = static_cast<std::size_t>((high - low + 1) / 2);
    std::fill_n(flags.begin(), len, std::uint8_t{1});

    for (std::size_t i = 0; i < base.size(); ++i) {
      const std::uint64_t p = base[i];
      if (p * p >= high) break;
      std::uint64_t m = next[i];
      for (; m < high; m += 2 * p) flags[static_cast<std::size_t>((m - low) / 2)] = 0;
      next[i] = m;
    }
    for (std::size_t j = 0; j < len; ++j) {
      if (flags[j]) out.push_back(low + 2 * j);
    }
  }
  return out;
}

PrimeTable primes_first(std::size_t count) {
  if (count < 1 || count > kMaxPrimeCount) {
    throw CapacityError("prime count " + std::to_string(count) +
                        " outside [1, " + std::to_string(kMaxPrimeCount) + "]");
  }
  std::uint64_t bound = prime_bound(count);
  std::vector<std::uint64_t> primes = sieve_up_to(bound);
  while (primes.size() < count) {
    bound += bound / 10 + 1;
    primes = sieve_up_to(bound);
  }
  primes.resize(count);
  primes.shrink_to_fit();
  const std::uint64_t last = primes.back();
  return PrimeTable(std::move(primes), last);
}

namespace {

constexpr std::size_t kHeaderBytes = 4 + 1 + 8 + 8;

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
  }
}

template <typename T>
T get_le(std::span<const std::uint8_t> bytes, std::size_t offset) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(static_cast<T>(bytes[offset + i]) << (8 * i));
  }
  return value;
}

std::uint32_t crc32_of(std::span<const std::uint8_t> bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  constexpr std::size_t kChunk = std::size_t{1} << 30;
  for (std::size_t off = 0; off < bytes.size(); off += kChunk) {
    const std::size_t n = std::min(kChunk, bytes.size() - off);
    crc = crc32(crc, bytes.data() + off, static_cast<uInt>(n));
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace

std::vector<std::uint8_t> encode_cache(const PrimeTable& table) {
  const auto primes = table.values();
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderBytes + 2 * (primes.size() - 1) + 4);
  out.insert(out.end(), std::begin(kCacheMagic), std::end(kCacheMagic));
  out.push_back(kCacheVersion);
  put_le<std::uint64_t>(out, primes.size());
  put_le<std::uint64_t>(out, primes.front());
  for (std::size_t i = 1; i < primes.size(); ++i) {
    const std::uint64_t g = primes[i] - primes[i - 1];
    if (g > std::numeric_limits<std::uint16_t>::max()) {
      throw CapacityError("gap after prime " + std::to_string(primes[i - 1]) +
                          " does not fit in 16 bits");
    }
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(g));
  }
  put_le<std::uint32_t>(out, crc32_of(out));
  return out;
}

PrimeTable decode_cache(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4) throw FormatError("truncated magic", bytes.size());
  if (std::memcmp(bytes.data(), kCacheMagic, 4) != 0) {
    throw FormatError("bad magic", 0);
  }
  if (bytes.size() < 5) throw FormatError("truncated version", bytes.size());
  if (bytes[4] != kCacheVersion) {
    throw FormatError("unsupported version " + std::to_string(bytes[4]), 4);
  }
  if (bytes.size() < kHeaderBytes) {
    throw FormatError("truncated header", bytes.size());
  }
  const auto count = get_le<std::uint64_t>(bytes, 5);
  if (count < 1 || count > kMaxPrimeCount) {
    throw FormatError("invalid count " + std::to_string(count), 5);
  }
  const auto first = get_le<std::uint64_t>(bytes, 13);
  if (first != 2) throw FormatError("first prime is not 2", 13);

  const std::size_t gaps_end = kHeaderBytes + 2 * static_cast<std::size_t>(count - 1);
  const std::size_t total = gaps_end + 4;
  if (bytes.size() < total) {
    throw CorruptionError("truncated gap stream", bytes.size());
  }
  if (bytes.size() > total) throw FormatError("trailing bytes", total);

  const auto stored_crc = get_le<std::uint32_t>(bytes, gaps_end);
  if (stored_crc != crc32_of(bytes.first(gaps_end))) {
    throw CorruptionError("checksum mismatch", gaps_end);
  }

  std::vector<std::uint64_t> primes;
  primes.reserve(static_cast<std::size_t>(count));
  primes.push_back(first);
  for (std::size_t off = kHeaderBytes; off < gaps_end; off += 2) {
    const auto g = get_le<std::uint16_t>(bytes, off);
    if (g == 0) throw CorruptionError("zero gap", off);
    primes.push_back(primes.back() + g);
  }
  const std::uint64_t last = primes.back();
  return PrimeTable(std::move(primes), last);
}

void save_cache(const PrimeTable& table, const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = encode_cache(table);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write to " + path.string() + " failed");
}

PrimeTable load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return decode_cache(bytes);
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("GAPSCOPE_CACHE_DIR"); dir && *dir) {
    return dir;
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "gapscope";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "gapscope";
  }
  return std::filesystem::temp_directory_path() / "gapscope";
}

std::filesystem::path cache_file_for(const std::filesystem::path& dir,
                                     std::size_t count) {
  return dir / ("primes-" + std::to_string(count) + ".pgc");
}

CachedTable load_or_build(std::size_t count, const std::filesystem::path& dir) {
  const auto path = cache_file_for(dir, count);
  CacheOutcome outcome = CacheOutcome::kMiss;
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    try {
      PrimeTable table = load_cache(path);
      if (table.count() == count) return {std::move(table), CacheOutcome::kHit};
    } catch (const Error&) {
    }
    outcome = CacheOutcome::kRebuilt;
  }

  PrimeTable table = primes_first(count);
  std::filesystem::create_directories(dir, ec);
  // Write-then-rename so a crash never leaves a half-written cache behind.
  const auto tmp = std::filesystem::path(path).concat(".tmp");
  try {
    save_cache(table, tmp);
    std::filesystem::rename(tmp, path, ec);
  } catch (const Error&) {
    std::filesystem::remove(tmp, ec);
  }
  return {std::move(table), outcome};
}

}  // namespace gapscope
