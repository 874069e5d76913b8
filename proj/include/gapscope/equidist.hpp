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
#include <string>
#include <string_view>
#include <vector>

#include "gapscope/sequences.hpp"

// Finite-n diagnostics for how close {s_r / s_n : r <= n} is to uniform on
// [0, 1]: Riemann sums of test functions with known integrals, exact star
// discrepancy, Weyl sums and the scaling ratio s_[nt] / s_n.

namespace gapscope {

enum class TestFunction {
  kOne,       // 1,             integral 1
  kIdentity,  // x,             integral 1/2
  kSquare,    // x^2,           integral 1/3
  kRootN,     // x^{1/n},       integral n/(n+1)
  kCosine,    // cos(2 pi x),   integral 0
};

// Names: one, identity, square, root_n, exp_cos. ConfigError otherwise.
TestFunction parse_test_function(std::string_view name);
std::string_view test_function_name(TestFunction fn);

struct RiemannResult {
  std::string test_fn;
  double sum = 0.0;
  double integral = 0.0;
  double abs_error = 0.0;
};

struct WeylResult {
  unsigned h = 0;
  double modulus = 0.0;
};

struct DiscrepancyReport {
  SequenceKind kind = SequenceKind::naturals();
  std::size_t n = 0;
  double star_discrepancy = 0.0;
  std::vector<WeylResult> weyl;
  std::vector<RiemannResult> riemann;
};

// s_r / s_n for r = 1..n, ascending.
std::vector<double> ratio_points(const Sequence& seq, std::size_t n);

// (1/n) sum_{r<=n} f(s_r / s_n), compensated. Requires n >= 2.
RiemannResult riemann_sum_check(const Sequence& seq, std::size_t n,
                                TestFunction fn);

// D*_n = max_i max(i/n - x_(i), x_(i) - (i-1)/n) over the sorted sample.
double star_discrepancy(std::span<const double> points);
double star_discrepancy(const Sequence& seq, std::size_t n);

// |(1/n) sum_r exp(2 pi i h x_r)|.
double weyl_sum(std::span<const double> points, unsigned h);
double weyl_sum(const Sequence& seq, std::size_t n, unsigned h);

// s_{floor(n t)} / s_n. DomainError if floor(n t) < 1 or t outside (0, 1].
double scaling_limit(const Sequence& seq, std::size_t n, double t);

// Discrepancy, Weyl moduli for `hs`, and every Riemann test function.
DiscrepancyReport discrepancy_report(const Sequence& seq, std::size_t n,
                                     std::span<const unsigned> hs);

}  // namespace gapscope
