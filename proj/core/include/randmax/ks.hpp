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

#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace randmax {

// Asymptotic 1% critical value of the one-sample Kolmogorov-Smirnov
// statistic: 1.628 / sqrt(n).
double ks_critical_1pct(std::size_t n);

// Same for the two-sample statistic with sizes n and m.
double ks_critical_1pct(std::size_t n, std::size_t m);

// One-sample statistic
//   max_i max(|i/n - F(x_i)|, |(i-1)/n - F(x_i)|)
// for a sorted sample. Exact for continuous F.
double ks_distance(std::span<const double> sorted,
                   const std::function<double(double)>& cdf);

// Two-sample statistic sup |F_a - F_b| for sorted samples.
double ks_two_sample(std::span<const double> sorted_a,
                     std::span<const double> sorted_b);

}  // namespace randmax
