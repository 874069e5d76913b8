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

#include "gapscope/stats.hpp"

#include <algorithm>
#include <string>

#include "gapscope/error.hpp"
#include "gapscope/numerics.hpp"

namespace gapscope {

double median(std::span<const double> values) {
  if (values.empty()) throw EmptySampleError("median of an empty sample");
  std::vector<double> v(values.begin(), values.end());
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return lower + (upper - lower) / 2.0;
}

SampleStats summarize(std::span<const double> values) {
  if (values.empty()) throw EmptySampleError("summary of an empty sample");
  SampleStats s;
  s.count = values.size();
  s.defined_count = values.size();
  s.mean = compensated_sum(values) / static_cast<double>(values.size());
  s.median = median(values);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

namespace {

SampleStats summarize_entries(std::span<const ExponentEntry> entries) {
  std::vector<double> defined;
  defined.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.value) defined.push_back(*e.value);
  }
  if (defined.empty()) {
    throw EmptySampleError("no defined exponents among " +
                           std::to_string(entries.size()) + " entries");
  }
  SampleStats s = summarize(defined);
  s.count = entries.size();
  return s;
}

}  // namespace

SampleStats summarize(const ExponentSeries& series, std::size_t first,
                      std::size_t last) {
  if (last < first) throw DomainError("empty summary range");
  const auto& e = series.entries;
  const auto lo = std::lower_bound(e.begin(), e.end(), first,
                                   [](const ExponentEntry& x, std::size_t n) { return x.n < n; });
  const auto hi = std::upper_bound(e.begin(), e.end(), last,
                                   [](std::size_t n, const ExponentEntry& x) { return n < x.n; });
  if (lo >= hi) throw EmptySampleError("summary range holds no entries");
  return summarize_entries(std::span<const ExponentEntry>(&*lo, static_cast<std::size_t>(hi - lo)));
}

SampleStats summarize(const ExponentSeries& series) {
  return summarize_entries(series.entries);
}

std::vector<SampleStats> windowed_summaries(const ExponentSeries& series,
                                            std::size_t window_size) {
  if (window_size < 1024) throw DomainError("window size must be at least 1024");
  const std::span<const ExponentEntry> all(series.entries);
  if (all.empty()) throw EmptySampleError("windowed summary of an empty series");
  std::vector<SampleStats> out;
  for (std::size_t start = 0; start < all.size(); start += window_size) {
    const std::size_t len = std::min(window_size, all.size() - start);
    out.push_back(summarize_entries(all.subspan(start, len)));
  }
  return out;
}

}  // namespace gapscope
