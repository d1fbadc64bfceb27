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

#include "randmax/nmid_compose.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "randmax/errors.hpp"
#include "randmax/quadrature.hpp"

namespace randmax {

MidLaw::MidLaw(PoissonMaximum law) : law_(std::move(law)) {
  const auto& pm = std::get<PoissonMaximum>(law_);
  if (!(pm.a > 0.0) || !std::isfinite(pm.a)) {
    throw DomainError("Poisson maximum intensity a must be finite and > 0");
  }
}

std::size_t MidLaw::dim() const {
  return std::visit(
      [](const auto& law) -> std::size_t {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, MaxStableLaw>) {
          return law.dim();
        } else {
          return law.base.dim();
        }
      },
      law_);
}

std::string MidLaw::name() const {
  if (const auto* ms = std::get_if<MaxStableLaw>(&law_)) return ms->name();
  const auto& pm = std::get<PoissonMaximum>(law_);
  std::ostringstream out;
  out << "poisson-max(a=" << pm.a << "," << pm.base.name() << ")";
  return out.str();
}

const MaxStableLaw& MidLaw::as_max_stable() const {
  if (const auto* ms = std::get_if<MaxStableLaw>(&law_)) return *ms;
  throw ConfigError("operation requires a max-stable base law, got " + name());
}

double MidLaw::exponent(std::span<const double> x) const {
  return std::visit([&](const auto& law) { return law.exponent(x); }, law_);
}

double MidLaw::cdf(std::span<const double> x) const {
  return std::exp(-exponent(x));
}

std::string NMaxStableLaw::name() const {
  return family_.name() + "+" + base_.name();
}

double NMaxStableLaw::cdf(std::span<const double> x) const {
  // -log H comes straight from the exponent functional, so large V never
  // passes through a log of a tiny CDF value.
  const double v = base_.exponent(x);
  if (std::isinf(v)) return 0.0;
  return family_.laplace(v);
}

double mixture_cdf(const NMaxStableLaw& law, std::span<const double> x,
                   std::size_t nodes) {
  if (nodes < 64) {
    throw ConfigError("mixture quadrature needs at least 64 nodes");
  }
  const double v = law.base().exponent(x);
  switch (law.family().kind()) {
    case FamilyKind::Degenerate:
      return std::exp(-v);
    case FamilyKind::Geometric:
      if (std::isinf(v)) return 0.0;
      return integrate_half_line(
          [v](double t) { return std::exp(-t * v) * std::exp(-t); }, nodes);
    case FamilyKind::MittagLeffler:
      break;
  }
  throw ConfigError(
      "mixture_cdf needs a mixer with a closed-form density; the "
      "Mittag-Leffler mixer has none");
}

void sample_random_max(const CountScheme& scheme, const ProductBase& base,
                       Stream& rng, std::span<double> out) {
  if (out.size() != base.dim()) throw DomainError("output dimension mismatch");
  const std::uint64_t count = scheme.sample(rng);
  // Every base quantile is nondecreasing, so the maximum of the K inverted
  // draws is the inverse of the maximum uniform; all K draws are consumed.
  std::fill(out.begin(), out.end(), 0.0);
  for (std::uint64_t k = 0; k < count; ++k) {
    for (auto& u : out) u = std::max(u, rng.uniform());
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = base.components()[i].quantile(out[i]);
  }
}

std::vector<double> sample_random_max_batch(const CountScheme& scheme,
                                            const ProductBase& base,
                                            std::size_t n, std::uint64_t seed,
                                            unsigned threads,
                                            Norming normalization) {
  const std::size_t d = base.dim();
  std::vector<double> draws(n * d);
  for_each_chunk(n, seed, threads,
                 [&](std::size_t, std::size_t begin, std::size_t end,
                     Stream& rng) {
                   for (std::size_t i = begin; i < end; ++i) {
                     std::span<double> row(draws.data() + i * d, d);
                     sample_random_max(scheme, base, rng, row);
                     for (auto& x : row) {
                       x = (x - normalization.shift) / normalization.scale;
                     }
                   }
                 });
  return draws;
}

double theta_component_cdf(const NMaxStableLaw& law, double theta,
                           std::span<const double> x) {
  const double v = law.base().exponent(x);
  if (std::isinf(v)) return 0.0;
  return law.family().laplace(theta * v);
}

SameTypeDecomposition same_type_decompose(const NMaxStableLaw& law,
                                          double theta) {
  const MaxStableLaw& h = law.base().as_max_stable();
  const CountScheme scheme(law.family(), theta);

  SameTypeDecomposition out;
  out.theta = theta;
  for (const auto& x : standard_points(h)) {
    const double f = law.cdf(x);
    const double rebuilt = scheme.pgf(theta_component_cdf(law, theta, x));
    out.residual = std::max(out.residual, std::abs(f - rebuilt));
  }
  for (const auto& m : h.marginals()) out.type_pairs.push_back(m.power_type(theta));
  return out;
}

}  // namespace randmax
