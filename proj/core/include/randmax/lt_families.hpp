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

#include "randmax/rng.hpp"

namespace randmax {

enum class FamilyKind { Geometric, MittagLeffler, Degenerate };

// A Laplace transform phi that solves the Poincare equation
//   phi(s) = P(phi(theta * s))
// for a probability generating function P, together with its inverse.
//
// Shipped families, all in closed form:
//   Geometric         phi(s) = 1 / (1 + s)     theta in (0, 1)
//   MittagLeffler(nu) phi(s) = 1 / (1 + s^nu)  theta in (0, 1), nu in (0, 1)
//   Degenerate        phi(s) = exp(-s)         theta in {1/n : n >= 1}
class LaplaceFamily {
 public:
  static LaplaceFamily geometric();
  static LaplaceFamily mittag_leffler(double nu);
  static LaplaceFamily degenerate();

  FamilyKind kind() const { return kind_; }
  // Index of the Mittag-Leffler family; 1 for the geometric family.
  double nu() const { return nu_; }
  std::string name() const;

  // phi(s) for finite s >= 0.
  double laplace(double s) const;
  // phi^{-1}(u) for u in (0, 1].
  double inverse(double u) const;

  bool admissible(double theta) const;

 private:
  LaplaceFamily(FamilyKind kind, double nu) : kind_(kind), nu_(nu) {}

  FamilyKind kind_;
  double nu_;
};

// The positive integer count N_theta with p.g.f.
//   P_theta(s) = phi(phi^{-1}(s) / theta).
class CountScheme {
 public:
  // Throws ConfigError if theta is not admissible for the family.
  CountScheme(LaplaceFamily family, double theta);

  const LaplaceFamily& family() const { return family_; }
  double theta() const { return theta_; }
  // 1/theta; exactly n for the degenerate family.
  double inv_theta() const { return inv_theta_; }

  double pgf(double s) const;
  double mean() const;
  std::uint64_t sample(Stream& rng) const;

 private:
  LaplaceFamily family_;
  double theta_;
  double inv_theta_;
  // Success probability of the geometric law of N (theta^nu).
  double success_;
};

// The limit variable U of theta * N_theta, whose Laplace transform is phi.
class Mixer {
 public:
  explicit Mixer(LaplaceFamily family) : family_(family) {}

  const LaplaceFamily& family() const { return family_; }
  double sample(Stream& rng) const;
  // Distribution function of U. Not available in closed form for the
  // Mittag-Leffler family (throws ConfigError).
  double cdf(double x) const;

 private:
  LaplaceFamily family_;
};

// Positive alpha-stable variate with E exp(-s S) = exp(-s^alpha), alpha in
// (0, 1], by the Kanter / Chambers-Mallows-Stuck construction.
double sample_positive_stable(double alpha, Stream& rng);

// max |P_theta(phi(theta s)) - phi(s)| over the s grid.
double poincare_residual(const LaplaceFamily& family, double theta,
                         std::span<const double> s_grid);

struct KsReport {
  std::size_t n = 0;
  double distance = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

// Points where verify_lemma12 compares the two distribution functions:
// midpoints of 4096 equal cells of (0, 10].
std::span<const double> lemma12_grid();

// Distance between the empirical d.f. of theta * N_theta (n draws) and the
// d.f. of U, evaluated on lemma12_grid(). Mittag-Leffler families are
// rejected: theta * N_theta has no non-degenerate limit there.
KsReport verify_lemma12(const LaplaceFamily& family, double theta,
                        std::size_t n, std::uint64_t seed, unsigned threads,
                        double threshold = 0.01);

}  // namespace randmax
