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

#include "randmax/extremal_proc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "randmax/errors.hpp"
#include "randmax/ks.hpp"

namespace randmax {
namespace {

void require_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("time must be finite and > 0");
  }
}

}  // namespace

std::optional<double> ExtremalPath::value_at(double t) const {
  std::optional<double> value;
  for (const auto& jump : jumps) {
    if (jump.time > t) break;
    value = jump.state;
  }
  return value;
}

std::size_t ExtremalPath::states_above(double level) const {
  return static_cast<std::size_t>(
      std::count_if(jumps.begin(), jumps.end(),
                    [level](const ExtremalJump& j) { return j.state > level; }));
}

double marginal_cdf(const MaxStableLaw& law, double t,
                    std::span<const double> x) {
  require_time(t);
  return std::exp(-t * law.exponent(x));
}

double marginal_cdf(const MaxStableLaw& law, double t, double x) {
  return marginal_cdf(law, t, std::span<const double>(&x, 1));
}

double default_floor(const MaxStableLaw& law, double horizon) {
  require_time(horizon);
  if (law.dim() != 1) throw ConfigError("path floors are univariate");
  const double t0 = horizon / 1000.0;
  // exp(-t0 V(y)) = 0.001
  return law.marginals()[0].exponent_inverse(std::log(1000.0) / t0);
}

std::uint64_t sample_poisson(double mean, Stream& rng) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw DomainError("Poisson mean must be finite and >= 0");
  }
  // Superposition keeps exp(-mean) away from underflow.
  constexpr double kPiece = 200.0;
  std::uint64_t total = 0;
  while (mean > kPiece) {
    total += sample_poisson(kPiece, rng);
    mean -= kPiece;
  }
  if (mean == 0.0) return total;
  double p = std::exp(-mean);
  double cumulative = p;
  const double u = rng.uniform();
  std::uint64_t k = 0;
  while (u > cumulative && p > 0.0) {
    ++k;
    p *= mean / static_cast<double>(k);
    cumulative += p;
  }
  return total + k;
}

ExtremalPath simulate_path(const MaxStableLaw& law, double horizon,
                           double floor, Stream& rng,
                           std::optional<double> tally_level) {
  if (law.dim() != 1 || law.marginals()[0].kind() != MarginalKind::Frechet) {
    throw ConfigError(
        "path simulation supports univariate Frechet laws only; use "
        "sample_y_at_time for marginal draws of other laws");
  }
  require_time(horizon);
  const Marginal& m = law.marginals()[0];
  const double v_floor = m.exponent(floor);
  if (!(v_floor > 0.0) || !std::isfinite(v_floor)) {
    throw DomainError("path floor must lie strictly above the lower endpoint");
  }
  if (tally_level && *tally_level < floor) {
    throw DomainError("exceedance tally level must not be below the floor");
  }

  ExtremalPath path;
  path.horizon = horizon;
  path.floor = floor;
  const double v_level =
      tally_level ? m.exponent(*tally_level) : 0.0;
  std::uint64_t shadowed = 0;

  double t = rng.exponential() / v_floor;
  if (t <= horizon) {
    double y = m.exponent_inverse(v_floor * rng.uniform());
    for (;;) {
      path.jumps.push_back({t, y});
      const double v_state = m.exponent(y);
      const double next = t + rng.exponential() / v_state;
      if (tally_level && y > *tally_level) {
        // Points in (level, y] during the holding interval do not move the
        // maximum; they arrive at rate V(level) - V(y).
        shadowed += sample_poisson(
            (v_level - v_state) * (std::min(next, horizon) - t), rng);
      }
      if (next > horizon) break;
      t = next;
      double w;
      do {
        w = m.exponent_inverse(v_state * rng.uniform());
      } while (!(w > y));
      y = w;
    }
  }
  if (tally_level) {
    path.exceedances = ExtremalPath::Tally{
        *tally_level, shadowed + path.states_above(*tally_level)};
  }
  return path;
}

void sample_y_at_time(const MaxStableLaw& law, double t, Stream& rng,
                      std::span<double> out) {
  require_time(t);
  if (out.size() != law.dim()) throw DomainError("output dimension mismatch");
  if (law.dim() == 2 && law.dependence() == Dependence::Logistic) {
    throw ConfigError(
        "logistic dependence is evaluation-only; exact sampling supports "
        "independence and complete dependence");
  }
  const auto& margins = law.marginals();
  if (law.dim() == 2 && law.dependence() == Dependence::CompleteDependence) {
    const double e = rng.exponential() / t;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = margins[i].exponent_inverse(e);
    }
    return;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = margins[i].exponent_inverse(rng.exponential() / t);
  }
}

std::vector<double> sample_subordinated(const NMaxStableLaw& law,
                                        std::size_t n, std::uint64_t seed,
                                        unsigned threads) {
  const MaxStableLaw& h = law.base().as_max_stable();
  if (h.dim() == 2 && h.dependence() == Dependence::Logistic) {
    throw ConfigError(
        "subordination sampling needs independence or complete dependence");
  }
  const Mixer mixer(law.family());
  const std::size_t d = h.dim();
  std::vector<double> draws(n * d);
  for_each_chunk(n, seed, threads,
                 [&](std::size_t, std::size_t begin, std::size_t end,
                     Stream& rng) {
                   for (std::size_t i = begin; i < end; ++i) {
                     const double z = mixer.sample(rng);
                     sample_y_at_time(
                         h, z, rng, std::span<double>(draws.data() + i * d, d));
                   }
                 });
  return draws;
}

SubordinationReport verify_subordination(const NMaxStableLaw& law,
                                         std::size_t n, std::uint64_t seed,
                                         unsigned threads) {
  if (n == 0) throw DomainError("verify_subordination needs draws");
  const std::vector<double> draws = sample_subordinated(law, n, seed, threads);
  const std::size_t d = law.dim();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  SubordinationReport report;
  report.n = n;
  report.critical = ks_critical_1pct(n);

  for (std::size_t c = 0; c < d; ++c) {
    std::vector<double> column(n);
    for (std::size_t i = 0; i < n; ++i) column[i] = draws[i * d + c];
    std::sort(column.begin(), column.end());
    const double distance = ks_distance(column, [&](double x) {
      std::vector<double> point(d, kInf);
      point[c] = x;
      return law.cdf(point);
    });
    report.coordinate_distances.push_back(distance);
    report.ks_distance = std::max(report.ks_distance, distance);
  }

  for (const auto& x : standard_points(law.base().as_max_stable())) {
    std::size_t below = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool inside = true;
      for (std::size_t c = 0; c < d; ++c) inside = inside && draws[i * d + c] <= x[c];
      below += inside ? 1 : 0;
    }
    const double empirical = static_cast<double>(below) / static_cast<double>(n);
    const double analytic = law.cdf(x);
    report.joint_grid_distance =
        std::max(report.joint_grid_distance, std::abs(empirical - analytic));
    auto row = x;
    row.push_back(empirical);
    row.push_back(analytic);
    report.grid.push_back(std::move(row));
  }

  report.pass = report.ks_distance < report.critical;
  return report;
}

}  // namespace randmax
