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
#include <vector>

namespace randmax {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1]; nodes by Newton iteration on P_n.
QuadratureRule gauss_legendre(std::size_t n);

// Integral of f over [0, inf) with the substitution t = u / (1 - u) and an
// n-point Gauss-Legendre rule in u on (0, 1).
double integrate_half_line(const std::function<double(double)>& f,
                           std::size_t n);

}  // namespace randmax
