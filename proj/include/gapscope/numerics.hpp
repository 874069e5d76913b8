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

// Kernels for quantities that sit within ~1e-5 of 1 at n ~ 10^6. Everything
// near 1 is carried as (value - 1); direct pow/root evaluation would throw
// away five or more significant digits there.

namespace gapscope {

// s^{1/n} represented as log_value = ln(s)/n and frac = s^{1/n} - 1.
struct LogRoot {
  std::size_t n = 0;
  double log_value = 0.0;
  double frac = 0.0;

  double root() const { return 1.0 + frac; }
};

// Requires s >= 1 and n >= 1 (DomainError otherwise).
LogRoot log_root(double s, std::size_t n);

// f(n)/f(n+1) - 1 with f(k) = s_k^{1/k}, evaluated as expm1(d) with
//   d = (ln s_n - n*log1p(gap/s_n)) / (n(n+1)),  gap = s_next - s_n.
// The gap form avoids subtracting two nearly equal logarithms.
// MonotonicityError unless gap > 0; DomainError unless n >= 1, s_n > 0.
double ratio_minus_one_gap(std::size_t n, double s_n, double gap);

// Same, from the two terms. Requires s_next > s_n.
double ratio_minus_one(std::size_t n, double s_n, double s_next);

// Neumaier's variant of Kahan summation. Order of add() calls is the order
// of summation; results are reproducible bit-for-bit for a fixed order.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double compensated_sum(std::span<const double> values) noexcept;

}  // namespace gapscope
