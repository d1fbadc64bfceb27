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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "randmax/evd_core.hpp"
#include "randmax/nmid_compose.hpp"
#include "randmax/rng.hpp"

namespace randmax {

struct ExtremalJump {
  double time;
  double state;
};

// A realized trajectory of a univariate extremal process on (0, horizon].
// Only the part above `floor` is resolved: before the first jump the state is
// somewhere below the floor.
struct ExtremalPath {
  std::vector<ExtremalJump> jumps;
  double horizon = 0.0;
  double floor = 0.0;

  // Optional tally of every point of the generating Poisson process above
  // `level` in (0, horizon], records or not.
  struct Tally {
    double level;
    std::uint64_t count;
  };
  std::optional<Tally> exceedances;

  // Y(t), or nullopt while the process is still below the floor.
  std::optional<double> value_at(double t) const;
  // Number of path states strictly above `level`.
  std::size_t states_above(double level) const;
};

// P{Y(t) <= x} = exp(-t V(x)).
double marginal_cdf(const MaxStableLaw& law, double t,
                    std::span<const double> x);
double marginal_cdf(const MaxStableLaw& law, double t, double x);

// 0.1% quantile of Y(T / 1000).
double default_floor(const MaxStableLaw& law, double horizon);

// Exact jump chain of the extremal process governed by a univariate Frechet
// law. The first state is the first point above the floor (arriving at rate
// V(floor)); from state y the holding time is exponential with rate V(y) and
// the next state W has P(W > w | W > y) = V(w) / V(y).
//
// If tally_level is given, the path also counts every point of the
// underlying Poisson process above that level (it must not be below the
// floor).
ExtremalPath simulate_path(const MaxStableLaw& law, double horizon,
                           double floor, Stream& rng,
                           std::optional<double> tally_level = std::nullopt);

// Exact draw of Y(t) by per-coordinate inversion of exp(-t V).
// Independence uses independent exponentials per coordinate,
// CompleteDependence one shared exponential. Logistic is CDF-only.
void sample_y_at_time(const MaxStableLaw& law, double t, Stream& rng,
                      std::span<double> out);

struct SubordinationReport {
  std::size_t n = 0;
  // max over coordinates of the marginal KS distances
  double ks_distance = 0.0;
  double critical = 0.0;
  bool pass = false;
  std::vector<double> coordinate_distances;
  // sup over the standard grid of |empirical joint d.f. - F|
  double joint_grid_distance = 0.0;
  // Rows of (x_1, ..., x_d, empirical, analytic) on the standard grid.
  std::vector<std::vector<double>> grid;
};

// Draws Z from the mixer with Laplace transform phi, then Y(Z) from the
// conditional law given Z, and compares the sample with F = phi(-log H).
SubordinationReport verify_subordination(const NMaxStableLaw& law,
                                         std::size_t n, std::uint64_t seed,
                                         unsigned threads);

// n draws of Y(Z), row-major (n x dim).
std::vector<double> sample_subordinated(const NMaxStableLaw& law,
                                        std::size_t n, std::uint64_t seed,
                                        unsigned threads);

// Poisson(mean) variate by sequential inversion.
std::uint64_t sample_poisson(double mean, Stream& rng);

}  // namespace randmax
