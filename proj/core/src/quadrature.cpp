// Copyright 2026 The randmax Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "randmax/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "randmax/errors.hpp"

namespace randmax {

QuadratureRule gauss_legendre(std::size_t n) {
  if (n == 0) throw ConfigError("quadrature needs at least one node");
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
  const std::size_t half = (n + 1) / 2;
  const double dn = static_cast<double>(n);
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi's initial guess for the i-th root, refined by Newton.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (dn + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double dk = static_cast<double>(k);
        const double p2 = ((2.0 * dk - 1.0) * x * p1 - (dk - 1.0) * p0) / dk;
        p0 = p1;
        p1 = p2;
      }
      dp = dn * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 4.0 * std::numeric_limits<double>::epsilon()) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

namespace {

// Rules are immutable once built, so handing out references is safe.
const QuadratureRule& cached_rule(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<const QuadratureRule>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const QuadratureRule>(gauss_legendre(n));
  return *slot;
}

}  // namespace

double integrate_half_line(const std::function<double(double)>& f,
                           std::size_t n) {
  const QuadratureRule& rule = cached_rule(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = 0.5 * (rule.nodes[i] + 1.0);
    const double one_minus = 1.0 - u;
    const double t = u / one_minus;
    sum += 0.5 * rule.weights[i] * f(t) / (one_minus * one_minus);
  }
  return sum;
}

}  // namespace randmax
