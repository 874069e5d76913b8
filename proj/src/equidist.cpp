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

#include "gapscope/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gapscope/error.hpp"
#include "gapscope/numerics.hpp"

namespace gapscope {

TestFunction parse_test_function(std::string_view name) {
  if (name == "one") return TestFunction::kOne;
  if (name == "identity") return TestFunction::kIdentity;
  if (name == "square") return TestFunction::kSquare;
  if (name == "root_n") return TestFunction::kRootN;
  if (name == "exp_cos") return TestFunction::kCosine;
  throw ConfigError("unknown test function '" + std::string(name) + "'");
}

std::string_view test_function_name(TestFunction fn) {
  switch (fn) {
    case TestFunction::kOne: return "one";
    case TestFunction::kIdentity: return "identity";
    case TestFunction::kSquare: return "square";
    case TestFunction::kRootN: return "root_n";
    case TestFunction::kCosine: return "exp_cos";
  }
  return {};
}

namespace {

void require_n(const Sequence& seq, std::size_t n) {
  if (n < 2) throw DomainError("equidistribution checks need n >= 2");
  if (n > seq.max_index()) {
    throw IndexError("n = " + std::to_string(n) + " beyond sequence range");
  }
}

}  // namespace

std::vector<double> ratio_points(const Sequence& seq, std::size_t n) {
  require_n(seq, n);
  const double top = seq.term(n);
  std::vector<double> x(n);
  for (std::size_t r = 1; r <= n; ++r) x[r - 1] = seq.term(r) / top;
  return x;
}

RiemannResult riemann_sum_check(const Sequence& seq, std::size_t n,
                                TestFunction fn) {
  require_n(seq, n);
  const double nd = static_cast<double>(n);
  const double top = seq.term(n);
  CompensatedSum acc;
  double integral = 0.0;
  switch (fn) {
    case TestFunction::kOne:
      for (std::size_t r = 1; r <= n; ++r) acc.add(1.0);
      integral = 1.0;
      break;
    case TestFunction::kIdentity:
      for (std::size_t r = 1; r <= n; ++r) acc.add(seq.term(r) / top);
      integral = 0.5;
      break;
    case TestFunction::kSquare:
      for (std::size_t r = 1; r <= n; ++r) {
        const double x = seq.term(r) / top;
        acc.add(x * x);
      }
      integral = 1.0 / 3.0;
      break;
    case TestFunction::kRootN: {
      // x^{1/n} = 1 + expm1((ln s_r - ln s_n) / n); accumulate the fracs.
      const double log_top = std::log(top);
      for (std::size_t r = 1; r <= n; ++r) {
        acc.add(std::expm1((std::log(seq.term(r)) - log_top) / nd));
      }
      acc.add(nd);
      integral = nd / (nd + 1.0);
      break;
    }
    case TestFunction::kCosine:
      for (std::size_t r = 1; r <= n; ++r) {
        acc.add(std::cos(2.0 * std::numbers::pi * (seq.term(r) / top)));
      }
      integral = 0.0;
      break;
  }
  const double sum = acc.value() / nd;
  return RiemannResult{std::string(test_function_name(fn)), sum, integral,
                       std::fabs(sum - integral)};
}

double star_discrepancy(std::span<const double> points) {
  if (points.empty()) throw EmptySampleError("star discrepancy of no points");
  std::vector<double> x(points.begin(), points.end());
  std::sort(x.begin(), x.end());
  const double nd = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double above = static_cast<double>(i + 1) / nd - x[i];
    const double below = x[i] - static_cast<double>(i) / nd;
    d = std::max({d, above, below});
  }
  return d;
}

double star_discrepancy(const Sequence& seq, std::size_t n) {
  return star_discrepancy(ratio_points(seq, n));
}

double weyl_sum(std::span<const double> points, unsigned h) {
  if (points.empty()) throw EmptySampleError("Weyl sum of no points");
  if (h < 1) throw DomainError("Weyl sum needs h >= 1");
  CompensatedSum re;
  CompensatedSum im;
  const double hd = static_cast<double>(h);
  for (double x : points) {
    // Reduce mod 1 before scaling by 2 pi to keep the argument small.
    double y = hd * x;
    y -= std::floor(y);
    const double angle = 2.0 * std::numbers::pi * y;
    re.add(std::cos(angle));
    im.add(std::sin(angle));
  }
  const double nd = static_cast<double>(points.size());
  return std::hypot(re.value(), im.value()) / nd;
}

double weyl_sum(const Sequence& seq, std::size_t n, unsigned h) {
  return weyl_sum(ratio_points(seq, n), h);
}

double scaling_limit(const Sequence& seq, std::size_t n, double t) {
  if (!(t > 0.0 && t <= 1.0)) throw DomainError("scaling limit needs t in (0, 1]");
  if (n < 1 || n > seq.max_index()) throw IndexError("n outside sequence range");
  const auto r = static_cast<std::size_t>(std::floor(static_cast<double>(n) * t));
  if (r < 1) throw DomainError("floor(n t) < 1");
  return seq.term(r) / seq.term(n);
}

DiscrepancyReport discrepancy_report(const Sequence& seq, std::size_t n,
                                     std::span<const unsigned> hs) {
  const std::vector<double> points = ratio_points(seq, n);
  DiscrepancyReport report;
  report.kind = seq.kind();
  report.n = n;
  report.star_discrepancy = star_discrepancy(points);
  for (unsigned h : hs) report.weyl.push_back({h, weyl_sum(points, h)});
  for (auto fn : {TestFunction::kOne, TestFunction::kIdentity, TestFunction::kSquare,
                  TestFunction::kRootN, TestFunction::kCosine}) {
    report.riemann.push_back(riemann_sum_check(seq, n, fn));
  }
  return report;
}

}  // namespace gapscope
