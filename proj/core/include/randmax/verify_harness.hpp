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
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "randmax/evd_core.hpp"
#include "randmax/lt_families.hpp"
#include "randmax/nmid_compose.hpp"

namespace randmax {

// Tolerances shared by every experiment.
inline constexpr double kIdentityTolerance = 1e-12;
inline constexpr double kRoundTripTolerance = 1e-10;
inline constexpr double kMixtureTolerance = 1e-8;
inline constexpr double kLimitTolerance = 2e-3;
inline constexpr double kPrelimitAllowance = 0.01;
inline constexpr double kWitnessSlack = 5e-3;

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Everything an experiment produced. Reproducible bit-for-bit from
// (name, parameters, seed).
struct ExperimentReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed = 0;
  std::vector<Table> tables;
  std::vector<std::pair<std::string, double>> statistics;
  std::vector<Check> checks;

  bool pass() const;
  void add_check(std::string check_name, bool ok, std::string detail = {});
};

struct ConvergenceRow {
  double n = 0.0;
  double deterministic_gap = 0.0;
  double random_gap = 0.0;
  // sup |theta^{-1} phi^{-1}(G_theta) - (-log H)|, the exponent-space gap
  // that bounds random_gap through the Lipschitz constant of phi.
  double exponent_gap = 0.0;
};

struct ConvergencePoint {
  double n = 0.0;
  double x = 0.0;
  double deterministic_gap = 0.0;
  double random_gap = 0.0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  std::vector<ConvergencePoint> points;

  Table summary_table(std::string name) const;
  Table point_table(std::string name) const;
  // Gap at grid point x for index n; throws if absent.
  const ConvergencePoint& at(double n, double x) const;
};

// Per n: deterministic column |exp(-n(1 - G(a_n x + b_n))) - H(x)| (Poisson
// maximum) and random column |phi(n(1 - G(a_n x + b_n))) - phi(-log H(x))|.
// An empty grid means the target's standard grid.
ConvergenceTable run_definetti(const LaplaceFamily& family,
                               const AttractionTriple& triple,
                               std::span<const double> ns,
                               std::span<const double> grid = {});

// Per n, with theta = 1/n: deterministic column |G^n(a_n x + b_n) - H(x)|
// and random column |P_theta(G(a_n x + b_n)) - phi(-log H(x))|. Rejects the
// Mittag-Leffler family (theta = 1/n does not match its count scaling).
ConvergenceTable run_thm24(const LaplaceFamily& family,
                           const AttractionTriple& triple,
                           std::span<const double> ns,
                           std::span<const double> grid = {});

bool nonincreasing(std::span<const double> values);

// Experiments as run by the command line front end. Each returns tables and
// pass/fail checks.
ExperimentReport experiment_poincare(const LaplaceFamily& family,
                                     std::span<const double> thetas);
ExperimentReport experiment_lemma12(const LaplaceFamily& family, double theta,
                                    std::size_t n, std::uint64_t seed,
                                    unsigned threads);
ExperimentReport experiment_definetti(const LaplaceFamily& family,
                                      const AttractionTriple& triple,
                                      std::span<const double> ns,
                                      std::span<const double> grid = {});
ExperimentReport experiment_thm24(const LaplaceFamily& family,
                                  const AttractionTriple& triple,
                                  std::span<const double> ns,
                                  std::span<const double> grid = {});
ExperimentReport experiment_thm31(const NMaxStableLaw& law,
                                  std::span<const double> thetas);
ExperimentReport experiment_thm32(const NMaxStableLaw& law, std::size_t n,
                                  std::uint64_t seed, unsigned threads);
ExperimentReport run_thm34(const LaplaceFamily& family,
                           const AttractionTriple& triple, double n,
                           std::size_t m, std::uint64_t seed, unsigned threads,
                           std::span<const double> grid = {});
ExperimentReport experiment_doa_table(const AttractionTriple& triple,
                                      std::span<const double> ns,
                                      std::span<const double> grid = {});

// Comparison of nmid_cdf with mixture_cdf on the standard grid of the base.
double composition_residual(const NMaxStableLaw& law,
                            std::size_t nodes = kDefaultQuadratureNodes);

// Default parameter lists.
std::vector<double> default_thetas();      // {0.5, 0.1, 0.01}
std::vector<double> default_limit_ns();    // {10, 100, 1000, 10000}
std::vector<double> poincare_s_grid();     // {0.01, 0.1, 0.5, 1, 2, 5, 10}

}  // namespace randmax
