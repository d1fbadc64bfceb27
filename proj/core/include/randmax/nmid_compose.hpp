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
#include <variant>
#include <vector>

#include "randmax/evd_core.hpp"
#include "randmax/lt_families.hpp"
#include "randmax/rng.hpp"

namespace randmax {

// exp(-a (1 - G)) as a law: the maximum of a Poisson(a) number of points.
struct PoissonMaximum {
  double a;
  ProductBase base;

  double exponent(std::span<const double> x) const {
    return a * base.survival(x);
  }
};

// A max-infinitely divisible d.f. H, carried through its exponent -log H.
class MidLaw {
 public:
  MidLaw(MaxStableLaw law) : law_(std::move(law)) {}  // NOLINT
  MidLaw(PoissonMaximum law);                         // NOLINT

  std::size_t dim() const;
  std::string name() const;
  bool max_stable() const {
    return std::holds_alternative<MaxStableLaw>(law_);
  }
  // Throws ConfigError for Poisson maxima.
  const MaxStableLaw& as_max_stable() const;

  // -log H(x), possibly +inf.
  double exponent(std::span<const double> x) const;
  double cdf(std::span<const double> x) const;

 private:
  std::variant<MaxStableLaw, PoissonMaximum> law_;
};

// F = phi(-log H): a random max-infinitely divisible law, random max-stable
// when H is max-stable.
class NMaxStableLaw {
 public:
  NMaxStableLaw(LaplaceFamily family, MidLaw base)
      : family_(family), base_(std::move(base)) {}

  const LaplaceFamily& family() const { return family_; }
  const MidLaw& base() const { return base_; }
  std::size_t dim() const { return base_.dim(); }
  std::string name() const;

  // phi(-log H(x)); 0 where H(x) = 0.
  double cdf(std::span<const double> x) const;
  double cdf(double x) const { return cdf(std::span<const double>(&x, 1)); }

 private:
  LaplaceFamily family_;
  MidLaw base_;
};

inline constexpr std::size_t kDefaultQuadratureNodes = 256;

// The mixture integral of H(x)^t against the mixing law with Laplace
// transform phi, by Gauss-Legendre quadrature on the half line. Available for
// mixers with closed-form densities (geometric: exp(-t)) or atoms
// (degenerate: point mass at 1).
double mixture_cdf(const NMaxStableLaw& law, std::span<const double> x,
                   std::size_t nodes = kDefaultQuadratureNodes);

// One draw of the componentwise maximum of N_theta independent draws of G.
void sample_random_max(const CountScheme& scheme, const ProductBase& base,
                       Stream& rng, std::span<double> out);

// n draws of sample_random_max, row-major (n x dim), each coordinate mapped
// through x -> (x - b) / a with the given per-draw normalization.
std::vector<double> sample_random_max_batch(const CountScheme& scheme,
                                            const ProductBase& base,
                                            std::size_t n, std::uint64_t seed,
                                            unsigned threads,
                                            Norming normalization = {});

struct SameTypeDecomposition {
  double theta = 0.0;
  // sup over the standard grid of |F(x) - P_theta(F_theta(x))|
  double residual = 0.0;
  // Per coordinate: F_theta(x) = F((x - b) / a).
  std::vector<Norming> type_pairs;
};

// F = P_theta(F_theta) with F_theta = phi(-theta log H) for a random
// max-stable F. Throws ConfigError unless the base is max-stable.
SameTypeDecomposition same_type_decompose(const NMaxStableLaw& law,
                                          double theta);

// F_theta(x) = phi(-theta log H(x)).
double theta_component_cdf(const NMaxStableLaw& law, double theta,
                           std::span<const double> x);

}  // namespace randmax
