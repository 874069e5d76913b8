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
#include <span>
#include <vector>

#include "gapscope/sequences.hpp"

namespace gapscope {

struct SampleStats {
  std::size_t count = 0;          // entries considered, defined or not
  std::size_t defined_count = 0;  // entries that entered the statistics
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};

// Exact median by selection on a private copy; an even count averages the
// two central order statistics. EmptySampleError on an empty sample.
double median(std::span<const double> values);

// Mean is compensated and taken in the given order.
SampleStats summarize(std::span<const double> values);

// Statistics over the defined entries with first <= n <= last. Undefined
// entries are counted in `count` but excluded from everything else.
SampleStats summarize(const ExponentSeries& series, std::size_t first,
                      std::size_t last);
SampleStats summarize(const ExponentSeries& series);

// Consecutive disjoint windows of `window_size` entries (the last one may be
// shorter). window_size < 1024 is a DomainError; a window larger than the
// series yields a single full-range window.
std::vector<SampleStats> windowed_summaries(const ExponentSeries& series,
                                            std::size_t window_size);

}  // namespace gapscope
