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

#include "randmax/verify_harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "randmax/errors.hpp"
#include "randmax/extremal_proc.hpp"
#include "randmax/ks.hpp"

namespace randmax {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

std::string fmt_list(std::span<const double> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ";";
    out += fmt(xs[i]);
  }
  return out;
}

std::vector<double> grid_or_default(std::span<const double> grid,
                                    const AttractionTriple& triple) {
  if (!grid.empty()) return {grid.begin(), grid.end()};
  return standard_grid(triple.target().marginals()[0]);
}

void require_ns(std::span<const double> ns) {
  if (ns.empty()) throw ConfigError("need at least one index n");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (!(ns[i] >= 1.0) || ns[i] != std::floor(ns[i])) {
      throw ConfigError("indices n must be integers >= 1");
    }
    if (i && !(ns[i] > ns[i - 1])) {
      throw ConfigError("indices n must be strictly increasing");
    }
  }
}

// Lipschitz constant of phi on [0, inf).
double lipschitz(const LaplaceFamily& family) {
  switch (family.kind()) {
    case FamilyKind::Geometric:
    case FamilyKind::Degenerate:
      return 1.0;
    case FamilyKind::MittagLeffler:
      break;
  }
  return kInf;
}

void reject_mittag_leffler(const LaplaceFamily& family, const char* what) {
  if (family.kind() == FamilyKind::MittagLeffler) {
    std::ostringstream msg;
    msg << what
        << " pairs theta = 1/n with classical norming; for the Mittag-Leffler "
           "family P_{1/n}(G_n) converges to phi(V^{1/nu}) instead of "
           "phi(V), so the experiment is only defined for geometric and "
           "degenerate families";
    throw ConfigError(msg.str());
  }
}

std::vector<double> column(const ConvergenceTable& table,
                           double ConvergenceRow::*field) {
  std::vector<double> out;
  for (const auto& row : table.rows) out.push_back(row.*field);
  return out;
}

}  // namespace

bool ExperimentReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

void ExperimentReport::add_check(std::string check_name, bool ok,
                                 std::string detail) {
  checks.push_back({std::move(check_name), ok, std::move(detail)});
}

Table ConvergenceTable::summary_table(std::string name) const {
  Table t{std::move(name),
          {"n", "sup_gap_deterministic", "sup_gap_random", "sup_gap_exponent"},
          {}};
  for (const auto& r : rows) {
    t.rows.push_back({static_cast<std::int64_t>(r.n), r.deterministic_gap,
                      r.random_gap, r.exponent_gap});
  }
  return t;
}

Table ConvergenceTable::point_table(std::string name) const {
  Table t{std::move(name), {"n", "x", "gap_deterministic", "gap_random"}, {}};
  for (const auto& p : points) {
    t.rows.push_back({static_cast<std::int64_t>(p.n), p.x, p.deterministic_gap,
                      p.random_gap});
  }
  return t;
}

const ConvergencePoint& ConvergenceTable::at(double n, double x) const {
  for (const auto& p : points) {
    if (p.n == n && p.x == x) return p;
  }
  throw DomainError("no convergence point at the requested (n, x)");
}

bool nonincreasing(std::span<const double> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1]) return false;
  }
  return true;
}

std::vector<double> default_thetas() { return {0.5, 0.1, 0.01}; }

std::vector<double> default_limit_ns() { return {10, 100, 1000, 10000}; }

std::vector<double> poincare_s_grid() {
  return {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
}

// ---------------------------------------------------------------------------
// Convergence tables

ConvergenceTable run_definetti(const LaplaceFamily& family,
                               const AttractionTriple& triple,
                               std::span<const double> ns,
                               std::span<const double> grid) {
  require_ns(ns);
  const std::vector<double> xs = grid_or_default(grid, triple);
  ConvergenceTable table;
  for (const double n : ns) {
    const Norming norm = triple.norming(n);
    ConvergenceRow row{n, 0.0, 0.0, 0.0};
    for (const double x : xs) {
      const double v = triple.target().exponent(x);
      const double scaled = n * triple.base().survival(norm(x));
      const double det = std::abs(std::exp(-scaled) - std::exp(-v));
      const double limit = std::isinf(v) ? 0.0 : family.laplace(v);
      const double rnd = std::abs(family.laplace(scaled) - limit);
      row.deterministic_gap = std::max(row.deterministic_gap, det);
      row.random_gap = std::max(row.random_gap, rnd);
      row.exponent_gap = std::max(row.exponent_gap, std::abs(scaled - v));
      table.points.push_back({n, x, det, rnd});
    }
    table.rows.push_back(row);
  }
  return table;
}

ConvergenceTable run_thm24(const LaplaceFamily& family,
                           const AttractionTriple& triple,
                           std::span<const double> ns,
                           std::span<const double> grid) {
  reject_mittag_leffler(family, "the random-maximum convergence experiment");
  require_ns(ns);
  const std::vector<double> xs = grid_or_default(grid, triple);
  ConvergenceTable table;
  for (const double n : ns) {
    // [1/theta] = n.
    const CountScheme scheme(family, 1.0 / n);
    const Norming norm = triple.norming(n);
    ConvergenceRow row{n, 0.0, 0.0, 0.0};
    for (const double x : xs) {
      const double g = triple.base().cdf(norm(x));
      const double v = triple.target().exponent(x);
      const double h = std::exp(-v);
      const double f = std::isinf(v) ? 0.0 : family.laplace(v);
      const double det = std::abs(power_of_cdf(g, n) - h);
      const double rnd = std::abs(scheme.pgf(g) - f);
      const double expo =
          g > 0.0 ? std::abs(scheme.inv_theta() * family.inverse(g) - v) : kInf;
      row.deterministic_gap = std::max(row.deterministic_gap, det);
      row.random_gap = std::max(row.random_gap, rnd);
      row.exponent_gap = std::max(row.exponent_gap, expo);
      table.points.push_back({n, x, det, rnd});
    }
    table.rows.push_back(row);
  }
  return table;
}

double composition_residual(const NMaxStableLaw& law, std::size_t nodes) {
  double worst = 0.0;
  for (const auto& x : standard_points(law.base().as_max_stable())) {
    worst = std::max(worst, std::abs(law.cdf(x) - mixture_cdf(law, x, nodes)));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Experiments

ExperimentReport experiment_poincare(const LaplaceFamily& family,
                                     std::span<const double> thetas) {
  ExperimentReport report;
  report.name = "poincare";
  report.parameters = {{"family", family.name()},
                       {"thetas", fmt_list(thetas)}};

  Table residuals{"poincare_residuals",
                  {"theta", "s", "pgf_of_phi_theta_s", "phi_s", "residual"},
                  {}};
  double worst = 0.0;
  for (const double theta : thetas) {
    const CountScheme scheme(family, theta);
    for (const double s : poincare_s_grid()) {
      const double lhs = scheme.pgf(family.laplace(theta * s));
      const double rhs = family.laplace(s);
      const double r = std::abs(lhs - rhs);
      worst = std::max(worst, r);
      residuals.rows.push_back({theta, s, lhs, rhs, r});
    }
  }
  report.tables.push_back(std::move(residuals));

  double round_trip = 0.0;
  for (int k = 0; k <= 80; ++k) {
    const double s = 0.25 * k;
    round_trip = std::max(round_trip,
                          std::abs(family.inverse(family.laplace(s)) - s));
  }
  report.statistics = {{"max_poincare_residual", worst},
                       {"max_round_trip_error", round_trip}};
  report.add_check("poincare residual < 1e-12", worst < kIdentityTolerance,
                   fmt(worst));
  report.add_check("inverse round trip < 1e-10 on [0,20]",
                   round_trip < kRoundTripTolerance, fmt(round_trip));
  return report;
}

ExperimentReport experiment_lemma12(const LaplaceFamily& family, double theta,
                                    std::size_t n, std::uint64_t seed,
                                    unsigned threads) {
  ExperimentReport report;
  report.name = "lemma12";
  report.seed = seed;
  report.parameters = {{"family", family.name()},
                       {"theta", fmt(theta)},
                       {"n", std::to_string(n)}};
  const KsReport ks = verify_lemma12(family, theta, n, seed, threads);
  report.tables.push_back(
      {"lemma12",
       {"theta", "n", "ks_distance", "threshold", "pass"},
       {{theta, static_cast<std::int64_t>(n), ks.distance, ks.threshold,
         static_cast<std::int64_t>(ks.pass)}}});
  report.statistics = {{"ks_distance", ks.distance}};
  report.add_check("KS(theta N_theta, U) < 0.01", ks.pass, fmt(ks.distance));
  return report;
}

ExperimentReport experiment_definetti(const LaplaceFamily& family,
                                      const AttractionTriple& triple,
                                      std::span<const double> ns,
                                      std::span<const double> grid) {
  ExperimentReport report;
  report.name = "definetti";
  report.parameters = {{"family", family.name()},
                       {"triple", triple.name()},
                       {"ns", fmt_list(ns)}};
  const ConvergenceTable table = run_definetti(family, triple, ns, grid);
  report.tables.push_back(table.summary_table("definetti"));
  report.tables.push_back(table.point_table("definetti_points"));
  const auto det = column(table, &ConvergenceRow::deterministic_gap);
  const auto rnd = column(table, &ConvergenceRow::random_gap);
  report.statistics = {{"final_gap_poisson_max", det.back()},
                       {"final_gap_random", rnd.back()}};
  report.add_check("gaps nonincreasing in n",
                   nonincreasing(det) && nonincreasing(rnd));
  if (ns.back() >= 10000) {
    report.add_check("final random gap < 2e-3", rnd.back() < kLimitTolerance,
                     fmt(rnd.back()));
    report.add_check("final Poisson-maximum gap < 2e-3",
                     det.back() < kLimitTolerance, fmt(det.back()));
  }
  return report;
}

ExperimentReport experiment_thm24(const LaplaceFamily& family,
                                  const AttractionTriple& triple,
                                  std::span<const double> ns,
                                  std::span<const double> grid) {
  ExperimentReport report;
  report.name = "thm24";
  report.parameters = {{"family", family.name()},
                       {"triple", triple.name()},
                       {"ns", fmt_list(ns)}};
  const ConvergenceTable table = run_thm24(family, triple, ns, grid);
  report.tables.push_back(table.summary_table("thm24"));
  report.tables.push_back(table.point_table("thm24_points"));
  const auto det = column(table, &ConvergenceRow::deterministic_gap);
  const auto rnd = column(table, &ConvergenceRow::random_gap);
  report.statistics = {{"final_gap_deterministic", det.back()},
                       {"final_gap_random", rnd.back()}};
  report.add_check("both gap columns nonincreasing in n",
                   nonincreasing(det) && nonincreasing(rnd));
  if (ns.back() >= 10000) {
    report.add_check("final deterministic gap < 2e-3",
                     det.back() < kLimitTolerance, fmt(det.back()));
    report.add_check("final random gap < 2e-3", rnd.back() < kLimitTolerance,
                     fmt(rnd.back()));
  }
  bool witness = true;
  for (const auto& row : table.rows) {
    witness = witness &&
              row.random_gap <= lipschitz(family) * row.exponent_gap + 1e-15;
  }
  report.add_check("random gap <= Lip(phi) * exponent gap", witness);
  bool cdf_witness = true;
  for (const auto& row : table.rows) {
    if (row.n >= 100) {
      cdf_witness = cdf_witness &&
                    row.random_gap <= row.deterministic_gap + kWitnessSlack;
    }
  }
  report.add_check("random gap <= deterministic gap + 5e-3 for n >= 100",
                   cdf_witness);
  return report;
}

ExperimentReport experiment_thm31(const NMaxStableLaw& law,
                                  std::span<const double> thetas) {
  ExperimentReport report;
  report.name = "thm31";
  report.parameters = {{"law", law.name()}, {"thetas", fmt_list(thetas)}};
  const auto points = standard_points(law.base().as_max_stable());

  Table table{"thm31", {"theta", "residual", "type_residual"}, {}};
  const std::size_t d = law.dim();
  for (std::size_t i = 0; i < d; ++i) {
    table.header.push_back("a" + std::to_string(i + 1));
    table.header.push_back("b" + std::to_string(i + 1));
  }
  double worst = 0.0;
  double worst_type = 0.0;
  for (const double theta : thetas) {
    const SameTypeDecomposition dec = same_type_decompose(law, theta);
    // F_theta(x) = F((x - b) / a) coordinatewise.
    double type_residual = 0.0;
    for (const auto& x : points) {
      std::vector<double> pre(d);
      for (std::size_t i = 0; i < d; ++i) {
        pre[i] = (x[i] - dec.type_pairs[i].shift) / dec.type_pairs[i].scale;
      }
      type_residual = std::max(
          type_residual,
          std::abs(theta_component_cdf(law, theta, x) - law.cdf(pre)));
    }
    std::vector<Cell> row{theta, dec.residual, type_residual};
    for (const auto& pair : dec.type_pairs) {
      row.emplace_back(pair.scale);
      row.emplace_back(pair.shift);
    }
    table.rows.push_back(std::move(row));
    worst = std::max(worst, dec.residual);
    worst_type = std::max(worst_type, type_residual);
  }
  report.tables.push_back(std::move(table));
  report.statistics = {{"max_residual", worst},
                       {"max_type_residual", worst_type}};
  report.add_check("F = P_theta(F_theta) residual < 1e-12",
                   worst < kIdentityTolerance, fmt(worst));
  report.add_check("F_theta of the same type as F (residual < 1e-12)",
                   worst_type < kIdentityTolerance, fmt(worst_type));
  return report;
}

ExperimentReport experiment_thm32(const NMaxStableLaw& law, std::size_t n,
                                  std::uint64_t seed, unsigned threads) {
  ExperimentReport report;
  report.name = "thm32";
  report.seed = seed;
  report.parameters = {{"law", law.name()}, {"n", std::to_string(n)}};
  const MaxStableLaw& h = law.base().as_max_stable();
  const std::size_t d = h.dim();
  const auto points = standard_points(h);

  // (i) => (ii): exp(-phi^{-1}(F)) recovers H and is max-stable.
  auto recovered = [&](std::span<const double> x) {
    return std::exp(-law.family().inverse(law.cdf(x)));
  };
  double recovery = 0.0;
  double stability = 0.0;
  for (const auto& x : points) {
    recovery = std::max(recovery, std::abs(recovered(x) - h.cdf(x)));
    for (const double t : {2.0, 5.0, 10.0}) {
      std::vector<double> y(d);
      for (std::size_t i = 0; i < d; ++i) {
        y[i] = h.marginals()[i].max_stable_norming(t)(x[i]);
      }
      stability = std::max(
          stability, std::abs(std::pow(recovered(y), t) - recovered(x)));
    }
  }
  report.add_check("exp(-phi^{-1}(F)) = H (< 1e-12)",
                   recovery < kIdentityTolerance, fmt(recovery));
  report.add_check("exp(-phi^{-1}(F)) max-stable for t in {2,5,10} (< 1e-12)",
                   stability < kIdentityTolerance, fmt(stability));

  // (iii) => (iv): the mixture integral over the random time, where the
  // mixer has a closed-form density.
  if (law.family().kind() != FamilyKind::MittagLeffler) {
    const double mix = composition_residual(law);
    report.statistics.emplace_back("mixture_residual", mix);
    report.add_check("phi(V(x)) = mixture integral (< 1e-8)",
                     mix < kMixtureTolerance, fmt(mix));
  }

  // (iv): Y(Z) by simulation.
  const SubordinationReport sub = verify_subordination(law, n, seed, threads);
  Table summary{"thm32", {"coordinate", "ks_distance", "critical", "pass"}, {}};
  for (std::size_t c = 0; c < d; ++c) {
    const double dist = sub.coordinate_distances[c];
    summary.rows.push_back({static_cast<std::int64_t>(c + 1), dist,
                            sub.critical,
                            static_cast<std::int64_t>(dist < sub.critical)});
  }
  Table grid{"thm32_grid", {}, {}};
  for (std::size_t c = 0; c < d; ++c) {
    grid.header.push_back("x" + std::to_string(c + 1));
  }
  grid.header.push_back("empirical");
  grid.header.push_back("analytic");
  for (const auto& row : sub.grid) {
    grid.rows.emplace_back(row.begin(), row.end());
  }
  report.tables.push_back(std::move(summary));
  report.tables.push_back(std::move(grid));
  report.statistics.emplace_back("recovery_residual", recovery);
  report.statistics.emplace_back("max_stability_residual", stability);
  report.statistics.emplace_back("ks_distance", sub.ks_distance);
  report.statistics.emplace_back("joint_grid_distance",
                                 sub.joint_grid_distance);
  report.add_check("KS(Y(Z), F) < 1.628/sqrt(n)", sub.pass,
                   fmt(sub.ks_distance) + " vs " + fmt(sub.critical));
  if (d == 2 && h.dependence() == Dependence::CompleteDependence &&
      h.marginals()[0].kind() == h.marginals()[1].kind() &&
      h.marginals()[0].alpha() == h.marginals()[1].alpha() &&
      h.marginals()[0].standard() && h.marginals()[1].standard()) {
    const auto draws = sample_subordinated(law, std::min<std::size_t>(n, 1000),
                                           seed, threads);
    bool equal = true;
    for (std::size_t i = 0; i < draws.size(); i += 2) {
      equal = equal && draws[i] == draws[i + 1];
    }
    report.add_check("comonotone coordinates coincide", equal);
  }
  return report;
}

ExperimentReport run_thm34(const LaplaceFamily& family,
                           const AttractionTriple& triple, double n,
                           std::size_t m, std::uint64_t seed, unsigned threads,
                           std::span<const double> grid) {
  reject_mittag_leffler(family, "the domain-of-attraction experiment");
  if (!(n >= 1.0) || n != std::floor(n)) {
    throw ConfigError("index n must be an integer >= 1");
  }
  if (m == 0) throw ConfigError("thm34 needs at least one draw");
  ExperimentReport report;
  report.name = "thm34";
  report.seed = seed;
  report.parameters = {{"family", family.name()},
                       {"triple", triple.name()},
                       {"n", fmt(n)},
                       {"m", std::to_string(m)}};
  const std::vector<double> xs = grid_or_default(grid, triple);
  const CountScheme scheme(family, 1.0 / n);
  const NMaxStableLaw limit(family, triple.target());
  const Norming norm = triple.norming(n);

  // (a) analytic.
  const DoaGap doa = doa_gap(triple, n, xs);
  double random_gap = 0.0;
  for (const double x : xs) {
    random_gap = std::max(random_gap, std::abs(scheme.pgf(triple.base().cdf(
                                                   norm(x))) -
                                               limit.cdf(x)));
  }

  // (b) stochastic.
  std::vector<double> draws = sample_random_max_batch(
      scheme, ProductBase(triple.base()), m, seed, threads, norm);
  std::sort(draws.begin(), draws.end());
  const double ks =
      ks_distance(draws, [&](double x) { return limit.cdf(x); });
  const double critical = ks_critical_1pct(m) + kPrelimitAllowance;

  report.tables.push_back(
      {"thm34",
       {"n", "doa_exponent_gap", "doa_cdf_gap", "random_cdf_gap", "m",
        "ks_distance", "ks_threshold"},
       {{static_cast<std::int64_t>(n), doa.exponent_gap, doa.cdf_gap,
         random_gap, static_cast<std::int64_t>(m), ks, critical}}});
  report.statistics = {{"doa_cdf_gap", doa.cdf_gap},
                       {"random_cdf_gap", random_gap},
                       {"ks_distance", ks}};
  const bool in_dma = doa.cdf_gap < kLimitTolerance;
  const bool in_dnma = random_gap < kLimitTolerance;
  report.add_check("DMA gap < 2e-3", in_dma, fmt(doa.cdf_gap));
  report.add_check("DNMA gap < 2e-3", in_dnma, fmt(random_gap));
  report.add_check("KS(normalized random max, F) < 1.628/sqrt(m) + 0.01",
                   ks < critical, fmt(ks) + " vs " + fmt(critical));
  return report;
}

ExperimentReport experiment_doa_table(const AttractionTriple& triple,
                                      std::span<const double> ns,
                                      std::span<const double> grid) {
  require_ns(ns);
  ExperimentReport report;
  report.name = "doa";
  report.parameters = {{"triple", triple.name()}, {"ns", fmt_list(ns)}};
  const std::vector<double> xs = grid_or_default(grid, triple);
  Table table{"doa", {"n", "sup_exponent_gap", "sup_cdf_gap"}, {}};
  std::vector<double> cdf_gaps;
  for (const double n : ns) {
    const DoaGap gap = doa_gap(triple, n, xs);
    table.rows.push_back(
        {static_cast<std::int64_t>(n), gap.exponent_gap, gap.cdf_gap});
    cdf_gaps.push_back(gap.cdf_gap);
  }
  report.tables.push_back(std::move(table));
  report.statistics = {{"final_cdf_gap", cdf_gaps.back()}};
  report.add_check("cdf gap nonincreasing in n", nonincreasing(cdf_gaps));
  if (ns.back() >= 10000) {
    report.add_check("final cdf gap < 2e-3", cdf_gaps.back() < kLimitTolerance,
                     fmt(cdf_gaps.back()));
  }
  return report;
}

}  // namespace randmax
