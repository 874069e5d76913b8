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

#include "gapscope/numerics.hpp"

#include <cmath>
#include <string>

#include "gapscope/error.hpp"

namespace gapscope {

LogRoot log_root(double s, std::size_t n) {
  if (n < 1) throw DomainError("log_root needs n >= 1");
  if (!(s >= 1.0)) throw DomainError("log_root needs s >= 1");
  const double lv = std::log(s) / static_cast<double>(n);
  return LogRoot{n, lv, std::expm1(lv)};
}

double ratio_minus_one_gap(std::size_t n, double s_n, double gap) {
  if (n < 1) throw DomainError("ratio_minus_one needs n >= 1");
  if (!(s_n > 0.0)) throw DomainError("ratio_minus_one needs s_n > 0");
  if (!(gap > 0.0)) {
    throw MonotonicityError("sequence not increasing at n = " + std::to_string(n));
  }
  const double nd = static_cast<double>(n);
  const double d = (std::log(s_n) - nd * std::log1p(gap / s_n)) / (nd * (nd + 1.0));
  return std::expm1(d);
}

double ratio_minus_one(std::size_t n, double s_n, double s_next) {
  return ratio_minus_one_gap(n, s_n, s_next - s_n);
}

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

double compensated_sum(std::span<const double> values) noexcept {
  CompensatedSum acc;
  for (double x : values) acc.add(x);
  return acc.value();
}

}  // namespace gapscope
