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

#include "randmax/evd_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "randmax/errors.hpp"

namespace randmax {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << what << " must be finite and > 0, got " << value;
    throw ConfigError(msg.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Marginal

Marginal::Marginal(MarginalKind kind, double alpha, double loc, double scale)
    : kind_(kind), alpha_(alpha), loc_(loc), scale_(scale) {
  require_positive(alpha, "shape alpha");
  require_positive(scale, "scale");
  if (!std::isfinite(loc)) throw ConfigError("location must be finite");
}

Marginal Marginal::frechet(double alpha, double loc, double scale) {
  return Marginal(MarginalKind::Frechet, alpha, loc, scale);
}

Marginal Marginal::gumbel(double loc, double scale) {
  return Marginal(MarginalKind::Gumbel, 1.0, loc, scale);
}

Marginal Marginal::reverse_weibull(double alpha, double loc, double scale) {
  return Marginal(MarginalKind::ReverseWeibull, alpha, loc, scale);
}

std::string Marginal::name() const {
  std::ostringstream out;
  switch (kind_) {
    case MarginalKind::Frechet:
      out << "frechet:" << alpha_;
      break;
    case MarginalKind::Gumbel:
      out << "gumbel";
      break;
    case MarginalKind::ReverseWeibull:
      out << "reverse-weibull:" << alpha_;
      break;
  }
  if (!standard()) out << "[loc=" << loc_ << ",scale=" << scale_ << "]";
  return out.str();
}

double Marginal::exponent(double x) const {
  const double z = (x - loc_) / scale_;
  switch (kind_) {
    case MarginalKind::Frechet:
      return z > 0.0 ? std::pow(z, -alpha_) : kInf;
    case MarginalKind::Gumbel:
      return std::exp(-z);
    case MarginalKind::ReverseWeibull:
      return z < 0.0 ? std::pow(-z, alpha_) : 0.0;
  }
  return kInf;
}

double Marginal::cdf(double x) const { return std::exp(-exponent(x)); }

double Marginal::exponent_inverse(double v) const {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError("exponent_inverse needs a finite v > 0");
  }
  double z = 0.0;
  switch (kind_) {
    case MarginalKind::Frechet:
      z = std::pow(v, -1.0 / alpha_);
      break;
    case MarginalKind::Gumbel:
      z = -std::log(v);
      break;
    case MarginalKind::ReverseWeibull:
      z = -std::pow(v, 1.0 / alpha_);
      break;
  }
  return loc_ + scale_ * z;
}

double Marginal::lower() const {
  return kind_ == MarginalKind::Frechet ? loc_ : -kInf;
}

Norming Marginal::max_stable_norming(double t) const {
  require_positive(t, "max-stability power t");
  Norming standard;
  switch (kind_) {
    case MarginalKind::Frechet:
      standard = {std::pow(t, 1.0 / alpha_), 0.0};
      break;
    case MarginalKind::Gumbel:
      standard = {1.0, std::log(t)};
      break;
    case MarginalKind::ReverseWeibull:
      standard = {std::pow(t, -1.0 / alpha_), 0.0};
      break;
  }
  // Conjugate the standardized norming by the location-scale map.
  return {standard.scale, loc_ * (1.0 - standard.scale) + scale_ * standard.shift};
}

Norming Marginal::power_type(double theta) const {
  // H^theta(A_theta y + B_theta) = H(y), so H^theta(x) = H((x - B) / A).
  return max_stable_norming(theta);
}

// ---------------------------------------------------------------------------
// MaxStableLaw

MaxStableLaw::MaxStableLaw(std::vector<Marginal> marginals,
                           Dependence dependence, double r)
    : marginals_(std::move(marginals)), dependence_(dependence), r_(r) {
  if (dependence_ == Dependence::Logistic) {
    if (!(r_ > 0.0 && r_ <= 1.0)) {
      throw ConfigError("logistic dependence parameter r must lie in (0, 1]");
    }
    for (const auto& m : marginals_) {
      if (m.kind() != MarginalKind::Frechet || m.alpha() != 1.0 ||
          !m.standard()) {
        throw ConfigError(
            "logistic dependence requires unit Frechet (alpha = 1, loc = 0, "
            "scale = 1) marginals");
      }
    }
  }
}

MaxStableLaw MaxStableLaw::univariate(Marginal marginal) {
  return MaxStableLaw({marginal}, Dependence::Independence, 1.0);
}

MaxStableLaw MaxStableLaw::bivariate(Marginal first, Marginal second,
                                     Dependence dependence, double r) {
  return MaxStableLaw({first, second}, dependence, r);
}

std::string MaxStableLaw::name() const {
  if (dim() == 1) return marginals_[0].name();
  std::ostringstream out;
  switch (dependence_) {
    case Dependence::Independence:
      out << "independence";
      break;
    case Dependence::CompleteDependence:
      out << "complete";
      break;
    case Dependence::Logistic:
      out << "logistic:" << r_;
      break;
  }
  out << "(" << marginals_[0].name() << "," << marginals_[1].name() << ")";
  return out.str();
}

void MaxStableLaw::require_dim(std::size_t d) const {
  if (d != dim()) {
    std::ostringstream msg;
    msg << "point has dimension " << d << " but the law has dimension "
        << dim();
    throw DomainError(msg.str());
  }
}

double MaxStableLaw::exponent(std::span<const double> x) const {
  require_dim(x.size());
  if (dim() == 1) return marginals_[0].exponent(x[0]);
  const double v1 = marginals_[0].exponent(x[0]);
  const double v2 = marginals_[1].exponent(x[1]);
  switch (dependence_) {
    case Dependence::Independence:
      return v1 + v2;
    case Dependence::CompleteDependence:
      return std::max(v1, v2);
    case Dependence::Logistic: {
      const double top = std::max(v1, v2);
      if (top == 0.0 || std::isinf(top)) return top;
      const double inv_r = 1.0 / r_;
      return top * std::pow(std::pow(v1 / top, inv_r) + std::pow(v2 / top, inv_r),
                            r_);
    }
  }
  return kInf;
}

double MaxStableLaw::exponent(double x) const {
  require_dim(1);
  return marginals_[0].exponent(x);
}

double MaxStableLaw::cdf(std::span<const double> x) const {
  return std::exp(-exponent(x));
}

double MaxStableLaw::cdf(double x) const { return std::exp(-exponent(x)); }

ExponentMeasure MaxStableLaw::exponent_measure() const {
  return ExponentMeasure(*this);
}

ExponentMeasure::ExponentMeasure(MaxStableLaw law) : law_(std::move(law)) {
  for (const auto& m : law_.marginals()) lower_.push_back(m.lower());
}

// ---------------------------------------------------------------------------
// Base distributions

BaseDistribution BaseDistribution::pareto(double alpha) {
  require_positive(alpha, "Pareto index");
  return BaseDistribution(BaseKind::Pareto, alpha);
}

BaseDistribution BaseDistribution::unit_exponential() {
  return BaseDistribution(BaseKind::UnitExponential, 1.0);
}

BaseDistribution BaseDistribution::uniform() {
  return BaseDistribution(BaseKind::Uniform, 1.0);
}

std::string BaseDistribution::name() const {
  switch (kind_) {
    case BaseKind::Pareto: {
      std::ostringstream out;
      out << "pareto:" << alpha_;
      return out.str();
    }
    case BaseKind::UnitExponential:
      return "exponential";
    case BaseKind::Uniform:
      return "uniform";
  }
  return "unknown";
}

double BaseDistribution::cdf(double x) const {
  switch (kind_) {
    case BaseKind::Pareto:
      return x < 1.0 ? 0.0 : -std::expm1(-alpha_ * std::log(x));
    case BaseKind::UnitExponential:
      return x <= 0.0 ? 0.0 : -std::expm1(-x);
    case BaseKind::Uniform:
      return std::clamp(x, 0.0, 1.0);
  }
  return 0.0;
}

double BaseDistribution::survival(double x) const {
  switch (kind_) {
    case BaseKind::Pareto:
      return x < 1.0 ? 1.0 : std::pow(x, -alpha_);
    case BaseKind::UnitExponential:
      return x <= 0.0 ? 1.0 : std::exp(-x);
    case BaseKind::Uniform:
      return 1.0 - std::clamp(x, 0.0, 1.0);
  }
  return 1.0;
}

double BaseDistribution::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("base quantile needs u in (0, 1)");
  }
  switch (kind_) {
    case BaseKind::Pareto:
      return std::pow(1.0 - u, -1.0 / alpha_);
    case BaseKind::UnitExponential:
      return -std::log1p(-u);
    case BaseKind::Uniform:
      return u;
  }
  return 0.0;
}

ProductBase::ProductBase(std::vector<BaseDistribution> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw ConfigError("a product base needs at least one component");
  }
}

std::string ProductBase::name() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += "*";
    out += components_[i].name();
  }
  return out;
}

double ProductBase::cdf(std::span<const double> x) const {
  if (x.size() != dim()) throw DomainError("point dimension mismatch");
  double g = 1.0;
  for (std::size_t i = 0; i < dim(); ++i) g *= components_[i].cdf(x[i]);
  return g;
}

double ProductBase::survival(std::span<const double> x) const {
  if (x.size() != dim()) throw DomainError("point dimension mismatch");
  if (dim() == 1) return components_[0].survival(x[0]);
  double log_g = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    const double g = components_[i].cdf(x[i]);
    if (g == 0.0) return 1.0;
    log_g += std::log1p(-components_[i].survival(x[i]));
  }
  return -std::expm1(log_g);
}

void ProductBase::sample(Stream& rng, std::span<double> out) const {
  if (out.size() != dim()) throw DomainError("output dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) out[i] = components_[i].sample(rng);
}

double poisson_max_cdf(double a, const ProductBase& base,
                       std::span<const double> x) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("Poisson maximum intensity a must be finite and > 0");
  }
  return std::exp(-a * base.survival(x));
}

// ---------------------------------------------------------------------------
// Attraction

namespace {

MaxStableLaw target_for(const BaseDistribution& base) {
  switch (base.kind()) {
    case BaseKind::Pareto:
      return MaxStableLaw::univariate(Marginal::frechet(base.alpha()));
    case BaseKind::UnitExponential:
      return MaxStableLaw::univariate(Marginal::gumbel());
    case BaseKind::Uniform:
      return MaxStableLaw::univariate(Marginal::reverse_weibull(1.0));
  }
  throw ConfigError("unsupported base distribution");
}

}  // namespace

AttractionTriple::AttractionTriple(BaseDistribution base)
    : base_(base), target_(target_for(base)) {}

std::string AttractionTriple::name() const {
  return base_.name() + "->" + target_.name();
}

Norming AttractionTriple::norming(double n) const {
  if (!(n >= 1.0)) throw DomainError("norming index n must be >= 1");
  switch (base_.kind()) {
    case BaseKind::Pareto:
      return {std::pow(n, 1.0 / base_.alpha()), 0.0};
    case BaseKind::UnitExponential:
      return {1.0, std::log(n)};
    case BaseKind::Uniform:
      return {1.0 / n, 1.0};
  }
  return {};
}

double power_of_cdf(double g, double n) {
  return g <= 0.0 ? 0.0 : std::exp(n * std::log(g));
}

DoaGap doa_gap(const AttractionTriple& triple, double n,
               std::span<const double> grid) {
  const Norming norm = triple.norming(n);
  DoaGap gap;
  for (const double x : grid) {
    const double y = norm(x);
    const double v = triple.target().exponent(x);
    gap.exponent_gap = std::max(
        gap.exponent_gap, std::abs(n * triple.base().survival(y) - v));
    gap.cdf_gap = std::max(
        gap.cdf_gap,
        std::abs(power_of_cdf(triple.base().cdf(y), n) - std::exp(-v)));
  }
  return gap;
}

std::vector<double> frechet_grid() { return {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}; }

std::vector<double> gumbel_grid() { return {-1.0, 0.0, 1.0, 2.0, 4.0}; }

std::vector<double> reverse_weibull_grid() {
  return {-4.0, -2.0, -1.0, -0.5, -0.25};
}

std::vector<double> standard_grid(const Marginal& marginal) {
  std::vector<double> grid;
  switch (marginal.kind()) {
    case MarginalKind::Frechet:
      grid = frechet_grid();
      break;
    case MarginalKind::Gumbel:
      grid = gumbel_grid();
      break;
    case MarginalKind::ReverseWeibull:
      grid = reverse_weibull_grid();
      break;
  }
  for (auto& x : grid) x = marginal.loc() + marginal.scale() * x;
  return grid;
}

std::vector<std::vector<double>> standard_points(const MaxStableLaw& law) {
  std::vector<std::vector<double>> points{{}};
  for (const auto& m : law.marginals()) {
    std::vector<std::vector<double>> next;
    for (const auto& prefix : points) {
      for (const double x : standard_grid(m)) {
        auto p = prefix;
        p.push_back(x);
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
  }
  return points;
}

}  // namespace randmax
