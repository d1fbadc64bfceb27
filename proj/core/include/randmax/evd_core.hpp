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
#include <span>
#include <string>
#include <vector>

#include "randmax/rng.hpp"

namespace randmax {

// Affine map x -> scale * x + shift.
struct Norming {
  double scale = 1.0;
  double shift = 0.0;

  double operator()(double x) const { return scale * x + shift; }
};

enum class MarginalKind { Frechet, Gumbel, ReverseWeibull };

// Univariate max-stable (generalised extreme value) type with location and
// scale. z = (x - loc) / scale and
//   Frechet(alpha)         V(z) = z^-alpha        for z > 0, +inf otherwise
//   Gumbel                 V(z) = exp(-z)
//   ReverseWeibull(alpha)  V(z) = (-z)^alpha      for z < 0, 0 otherwise
// with H = exp(-V).
class Marginal {
 public:
  static Marginal frechet(double alpha, double loc = 0.0, double scale = 1.0);
  static Marginal gumbel(double loc = 0.0, double scale = 1.0);
  static Marginal reverse_weibull(double alpha, double loc = 0.0,
                                  double scale = 1.0);

  MarginalKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double loc() const { return loc_; }
  double scale() const { return scale_; }
  bool standard() const { return loc_ == 0.0 && scale_ == 1.0; }
  std::string name() const;

  // -log H(x); +inf below the lower endpoint.
  double exponent(double x) const;
  double cdf(double x) const;
  // The x with exponent(x) == v, for v in (0, inf).
  double exponent_inverse(double v) const;
  // Lower endpoint of the exponent measure support (loc for Frechet, -inf
  // otherwise).
  double lower() const;
  // (A_t, B_t) with H^t(A_t x + B_t) = H(x).
  Norming max_stable_norming(double t) const;
  // (a, b) with exp(-theta V(x)) = H((x - b) / a), i.e. H^theta is H
  // rescaled by a and shifted by b.
  Norming power_type(double theta) const;

 private:
  Marginal(MarginalKind kind, double alpha, double loc, double scale);

  MarginalKind kind_;
  double alpha_;
  double loc_;
  double scale_;
};

enum class Dependence { Independence, CompleteDependence, Logistic };

class ExponentMeasure;

// A max-stable d.f. H on R^d, d in {1, 2}, defined through its exponent
// functional V(x) = mu([l, x]^c), H = exp(-V).
//
// Bivariate dependence structures:
//   Independence         V = V1 + V2
//   CompleteDependence   V = max(V1, V2)
//   Logistic(r)          V = (V1^{1/r} + V2^{1/r})^r, r in (0, 1], unit
//                        Frechet marginals only
class MaxStableLaw {
 public:
  static MaxStableLaw univariate(Marginal marginal);
  static MaxStableLaw bivariate(Marginal first, Marginal second,
                                Dependence dependence, double r = 1.0);

  std::size_t dim() const { return marginals_.size(); }
  const std::vector<Marginal>& marginals() const { return marginals_; }
  Dependence dependence() const { return dependence_; }
  double logistic_r() const { return r_; }
  std::string name() const;

  // V(x); +inf if any coordinate is below its lower endpoint.
  double exponent(std::span<const double> x) const;
  double exponent(double x) const;
  double cdf(std::span<const double> x) const;
  double cdf(double x) const;

  ExponentMeasure exponent_measure() const;

 private:
  MaxStableLaw(std::vector<Marginal> marginals, Dependence dependence,
               double r);
  void require_dim(std::size_t d) const;

  std::vector<Marginal> marginals_;
  Dependence dependence_;
  double r_;
};

// The exponent measure mu of a max-stable law, seen through its lower
// corner l and the functional x -> mu([l, x]^c).
class ExponentMeasure {
 public:
  explicit ExponentMeasure(MaxStableLaw law);

  std::span<const double> lower_corner() const { return lower_; }
  double operator()(std::span<const double> x) const {
    return law_.exponent(x);
  }

 private:
  MaxStableLaw law_;
  std::vector<double> lower_;
};

enum class BaseKind { Pareto, UnitExponential, Uniform };

// Base d.f. G for Poisson maxima, random maxima, and attraction experiments.
//   Pareto(alpha)    G(x) = 1 - x^-alpha, x >= 1
//   UnitExponential  G(x) = 1 - exp(-x), x >= 0
//   Uniform          G(x) = x on [0, 1]
class BaseDistribution {
 public:
  static BaseDistribution pareto(double alpha);
  static BaseDistribution unit_exponential();
  static BaseDistribution uniform();

  BaseKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  std::string name() const;

  double cdf(double x) const;
  // 1 - G(x), computed without cancellation.
  double survival(double x) const;
  // Nondecreasing in u on (0, 1).
  double quantile(double u) const;
  double sample(Stream& rng) const { return quantile(rng.uniform()); }

 private:
  BaseDistribution(BaseKind kind, double alpha) : kind_(kind), alpha_(alpha) {}

  BaseKind kind_;
  double alpha_;
};

// Product of independent univariate base d.f.s on R^d.
class ProductBase {
 public:
  explicit ProductBase(std::vector<BaseDistribution> components);
  explicit ProductBase(BaseDistribution component)
      : ProductBase(std::vector<BaseDistribution>{component}) {}

  std::size_t dim() const { return components_.size(); }
  const std::vector<BaseDistribution>& components() const {
    return components_;
  }
  std::string name() const;

  double cdf(std::span<const double> x) const;
  double survival(std::span<const double> x) const;
  void sample(Stream& rng, std::span<double> out) const;

 private:
  std::vector<BaseDistribution> components_;
};

// exp(-a (1 - G(x))): the d.f. of the maximum of a Poisson(a) number of
// G-distributed points (a max-infinitely divisible law).
double poisson_max_cdf(double a, const ProductBase& base,
                       std::span<const double> x);

// A base d.f. G in the domain of max-attraction of a univariate max-stable
// target H, with closed-form norming: n(1 - G(a_n x + b_n)) -> -log H(x).
//   Pareto(alpha)   -> Frechet(alpha)         a_n = n^{1/alpha}, b_n = 0
//   UnitExponential -> Gumbel                 a_n = 1,           b_n = log n
//   Uniform         -> ReverseWeibull(1)      a_n = 1/n,         b_n = 1
class AttractionTriple {
 public:
  explicit AttractionTriple(BaseDistribution base);

  const BaseDistribution& base() const { return base_; }
  const MaxStableLaw& target() const { return target_; }
  std::string name() const;
  Norming norming(double n) const;

 private:
  BaseDistribution base_;
  MaxStableLaw target_;
};

struct DoaGap {
  // sup |n (1 - G(a_n x + b_n)) - (-log H(x))|
  double exponent_gap = 0.0;
  // sup |G^n(a_n x + b_n) - H(x)|
  double cdf_gap = 0.0;
};

DoaGap doa_gap(const AttractionTriple& triple, double n,
               std::span<const double> grid);

// G^n computed as exp(n log G), with 0^n = 0.
double power_of_cdf(double g, double n);

// Standard evaluation grids (in standardized coordinates).
std::vector<double> frechet_grid();
std::vector<double> gumbel_grid();
std::vector<double> reverse_weibull_grid();
// The grid for a marginal type, mapped through its location and scale.
std::vector<double> standard_grid(const Marginal& marginal);
// Product of the marginal standard grids of a law, one point per row.
std::vector<std::vector<double>> standard_points(const MaxStableLaw& law);

}  // namespace randmax
