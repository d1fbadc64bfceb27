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

#include "randmax/lt_families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "randmax/errors.hpp"

namespace randmax {

LaplaceFamily LaplaceFamily::geometric() {
  return LaplaceFamily(FamilyKind::Geometric, 1.0);
}

LaplaceFamily LaplaceFamily::mittag_leffler(double nu) {
  if (!(nu > 0.0 && nu < 1.0)) {
    std::ostringstream msg;
    msg << "Mittag-Leffler index must lie in (0, 1), got " << nu;
    throw ConfigError(msg.str());
  }
  return LaplaceFamily(FamilyKind::MittagLeffler, nu);
}

LaplaceFamily LaplaceFamily::degenerate() {
  return LaplaceFamily(FamilyKind::Degenerate, 1.0);
}

std::string LaplaceFamily::name() const {
  switch (kind_) {
    case FamilyKind::Geometric:
      return "geometric";
    case FamilyKind::MittagLeffler: {
      std::ostringstream out;
      out << "mittag-leffler:" << nu_;
      return out.str();
    }
    case FamilyKind::Degenerate:
      return "degenerate";
  }
  return "unknown";
}

double LaplaceFamily::laplace(double s) const {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    std::ostringstream msg;
    msg << "Laplace transform argument must be finite and >= 0, got " << s;
    throw DomainError(msg.str());
  }
  switch (kind_) {
    case FamilyKind::Geometric:
      return 1.0 / (1.0 + s);
    case FamilyKind::MittagLeffler:
      return 1.0 / (1.0 + std::pow(s, nu_));
    case FamilyKind::Degenerate:
      return std::exp(-s);
  }
  return 0.0;
}

double LaplaceFamily::inverse(double u) const {
  if (!(u > 0.0 && u <= 1.0)) {
    std::ostringstream msg;
    msg << "inverse Laplace transform argument must lie in (0, 1], got " << u;
    throw DomainError(msg.str());
  }
  switch (kind_) {
    case FamilyKind::Geometric:
      return (1.0 - u) / u;
    case FamilyKind::MittagLeffler:
      return std::pow((1.0 - u) / u, 1.0 / nu_);
    case FamilyKind::Degenerate:
      return -std::log(u);
  }
  return 0.0;
}

bool LaplaceFamily::admissible(double theta) const {
  if (kind_ == FamilyKind::Degenerate) {
    if (!(theta > 0.0 && theta <= 1.0)) return false;
    const double n = std::round(1.0 / theta);
    return std::abs(n * theta - 1.0) <= 1e-9;
  }
  return theta > 0.0 && theta < 1.0;
}

CountScheme::CountScheme(LaplaceFamily family, double theta)
    : family_(family), theta_(theta), inv_theta_(0.0), success_(0.0) {
  if (!family_.admissible(theta)) {
    std::ostringstream msg;
    msg << "theta = " << theta << " is not admissible for the "
        << family_.name() << " family";
    throw ConfigError(msg.str());
  }
  switch (family_.kind()) {
    case FamilyKind::Geometric:
      inv_theta_ = 1.0 / theta;
      success_ = theta;
      break;
    case FamilyKind::MittagLeffler:
      inv_theta_ = 1.0 / theta;
      success_ = std::pow(theta, family_.nu());
      break;
    case FamilyKind::Degenerate:
      inv_theta_ = std::round(1.0 / theta);
      success_ = 1.0;
      break;
  }
}

double CountScheme::pgf(double s) const {
  if (!(s >= 0.0 && s <= 1.0)) {
    std::ostringstream msg;
    msg << "p.g.f. argument must lie in [0, 1], got " << s;
    throw DomainError(msg.str());
  }
  if (s == 1.0) return 1.0;
  // N >= 1, so P(0) = P(N = 0) = 0.
  if (s == 0.0) return 0.0;
  return family_.laplace(inv_theta_ * family_.inverse(s));
}

double CountScheme::mean() const {
  if (family_.kind() == FamilyKind::Degenerate) return inv_theta_;
  return 1.0 / success_;
}

std::uint64_t CountScheme::sample(Stream& rng) const {
  if (family_.kind() == FamilyKind::Degenerate) {
    return static_cast<std::uint64_t>(inv_theta_);
  }
  // P(N = k) = p (1 - p)^{k - 1}; inversion of the survival function.
  const double k = std::floor(std::log(rng.uniform()) / std::log1p(-success_));
  constexpr double kMax = 9.0e18;
  return 1 + static_cast<std::uint64_t>(std::min(k, kMax));
}

double Mixer::sample(Stream& rng) const {
  switch (family_.kind()) {
    case FamilyKind::Geometric:
      return rng.exponential();
    case FamilyKind::MittagLeffler: {
      // E^{1/nu} S_nu has Laplace transform E exp(-s^nu E) = 1 / (1 + s^nu).
      const double e = rng.exponential();
      return std::pow(e, 1.0 / family_.nu()) *
             sample_positive_stable(family_.nu(), rng);
    }
    case FamilyKind::Degenerate:
      return 1.0;
  }
  return 0.0;
}

double Mixer::cdf(double x) const {
  switch (family_.kind()) {
    case FamilyKind::Geometric:
      return x <= 0.0 ? 0.0 : -std::expm1(-x);
    case FamilyKind::Degenerate:
      return x >= 1.0 ? 1.0 : 0.0;
    case FamilyKind::MittagLeffler:
      break;
  }
  throw ConfigError(
      "the Mittag-Leffler mixer has no closed-form distribution function");
}

double sample_positive_stable(double alpha, Stream& rng) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ConfigError("positive stable index must lie in (0, 1]");
  }
  if (alpha == 1.0) return 1.0;
  constexpr double pi = std::numbers::pi;
  const double u = pi * rng.uniform();
  const double w = rng.exponential();
  // Kanter: S = sin(a u) / sin(u)^{1/a} * (sin((1 - a) u) / W)^{(1 - a)/a}
  const double head = std::sin(alpha * u) / std::pow(std::sin(u), 1.0 / alpha);
  const double tail =
      std::pow(std::sin((1.0 - alpha) * u) / w, (1.0 - alpha) / alpha);
  return head * tail;
}

double poincare_residual(const LaplaceFamily& family, double theta,
                         std::span<const double> s_grid) {
  const CountScheme scheme(family, theta);
  double worst = 0.0;
  for (const double s : s_grid) {
    const double lhs = scheme.pgf(family.laplace(theta * s));
    worst = std::max(worst, std::abs(lhs - family.laplace(s)));
  }
  return worst;
}

std::span<const double> lemma12_grid() {
  static const std::vector<double> grid = [] {
    constexpr std::size_t cells = 4096;
    constexpr double upper = 10.0;
    std::vector<double> g(cells);
    for (std::size_t k = 0; k < cells; ++k) {
      g[k] = (static_cast<double>(k) + 0.5) * upper / cells;
    }
    return g;
  }();
  return grid;
}

KsReport verify_lemma12(const LaplaceFamily& family, double theta,
                        std::size_t n, std::uint64_t seed, unsigned threads,
                        double threshold) {
  if (family.kind() == FamilyKind::MittagLeffler) {
    throw ConfigError(
        "theta * N_theta degenerates for the Mittag-Leffler family with "
        "nu < 1 (theta^nu * N_theta is the non-degenerate scaling); "
        "the limit check is only defined for geometric and degenerate "
        "families");
  }
  if (n == 0) throw DomainError("verify_lemma12 needs at least one draw");
  const CountScheme scheme(family, theta);
  const Mixer mixer(family);

  std::vector<double> scaled(n);
  for_each_chunk(n, seed, threads,
                 [&](std::size_t, std::size_t begin, std::size_t end,
                     Stream& rng) {
                   for (std::size_t i = begin; i < end; ++i) {
                     scaled[i] = static_cast<double>(scheme.sample(rng)) /
                                 scheme.inv_theta();
                   }
                 });
  std::sort(scaled.begin(), scaled.end());

  KsReport report;
  report.n = n;
  report.threshold = threshold;
  for (const double x : lemma12_grid()) {
    const auto below = std::upper_bound(scaled.begin(), scaled.end(), x);
    const double empirical =
        static_cast<double>(below - scaled.begin()) / static_cast<double>(n);
    report.distance = std::max(report.distance, std::abs(empirical - mixer.cdf(x)));
  }
  report.pass = report.distance < threshold;
  return report;
}

}  // namespace randmax
