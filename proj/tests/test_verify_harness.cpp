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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "randmax/errors.hpp"
#include "randmax/ks.hpp"
#include "randmax/report_io.hpp"
#include "randmax/rng.hpp"
#include "randmax/verify_harness.hpp"

namespace randmax {
namespace {

const AttractionTriple kPareto1(BaseDistribution::pareto(1.0));

std::vector<double> ns() { return default_limit_ns(); }

TEST(Ks, SinglePoint) {
  const std::vector<double> one = {1.0};
  EXPECT_DOUBLE_EQ(ks_distance(one, [](double) { return 0.5; }), 0.5);
  EXPECT_THROW(ks_distance(std::vector<double>{}, [](double) { return 0.5; }), DomainError);
}

TEST(Ks, CriticalValues) {
  EXPECT_NEAR(ks_critical_1pct(100000), 0.0051481, 1e-6);
  EXPECT_NEAR(ks_critical_1pct(100, 100), 1.628 * std::sqrt(0.02), 1e-15);
}

TEST(Ks, SampleFromSameLawPasses) {
  Stream rng(1);
  std::vector<double> x(100000);
  for (auto& v : x) v = rng.exponential();
  std::sort(x.begin(), x.end());
  EXPECT_LT(ks_distance(x, [](double t) { return 1 - std::exp(-t); }),
            ks_critical_1pct(x.size()));
}

TEST(Ks, ShiftedParetoApproachesSupGap) {
  // Pareto(1) shifted by 1/2 against Pareto(1): sup |G - F| = 1/3 at x = 3/2.
  Stream rng(2);
  std::vector<double> x(200000);
  for (auto& v : x) v = 0.5 + 1.0 / rng.uniform();
  std::sort(x.begin(), x.end());
  EXPECT_NEAR(ks_distance(x, [](double t) { return t < 1 ? 0.0 : 1 - 1 / t; }), 1.0 / 3.0,
              0.01);
}

TEST(Ks, TwoSample) {
  const std::vector<double> a = {1, 2, 3, 4};
  const std::vector<double> b = {1, 2, 3, 4};
  EXPECT_EQ(ks_two_sample(a, b), 0.0);
  const std::vector<double> c = {5, 6, 7, 8};
  EXPECT_EQ(ks_two_sample(a, c), 1.0);
}

TEST(Definetti, Examples) {
  const std::vector<double> n4 = {1e4};
  const auto deg = run_definetti(LaplaceFamily::degenerate(), kPareto1, n4);
  EXPECT_LT(deg.rows[0].random_gap, 1e-3);
  EXPECT_NEAR(deg.rows[0].random_gap, deg.rows[0].deterministic_gap, 1e-14);
  const auto geo = run_definetti(LaplaceFamily::geometric(), kPareto1, n4);
  EXPECT_LT(geo.at(1e4, 1.0).random_gap, 5e-4);
  for (const auto& family : {LaplaceFamily::geometric(), LaplaceFamily::degenerate(),
                             LaplaceFamily::mittag_leffler(0.5)}) {
    const auto table = run_definetti(family, kPareto1, ns());
    std::vector<double> gaps;
    for (const auto& r : table.rows) gaps.push_back(r.random_gap);
    EXPECT_TRUE(nonincreasing(gaps)) << family.name();
  }
}

TEST(PairedConvergence, HandValues) {
  const std::vector<double> n100 = {100};
  const auto t = run_thm24(LaplaceFamily::geometric(), kPareto1, n100);
  const auto& p = t.at(100, 1.0);
  EXPECT_NEAR(p.deterministic_gap, std::abs(std::pow(0.99, 100) - std::exp(-1.0)), 1e-15);
  EXPECT_NEAR(p.random_gap, std::abs(0.0099 / 0.0199 - 0.5), 1e-14);
  EXPECT_NEAR(p.random_gap, 0.0025, 0.00025);
}

TEST(PairedConvergence, ConvergesAndShrinks) {
  for (const auto& base : {BaseDistribution::pareto(1.0), BaseDistribution::unit_exponential(),
                           BaseDistribution::uniform()}) {
    const AttractionTriple triple(base);
    const auto t = run_thm24(LaplaceFamily::geometric(), triple, ns());
    std::vector<double> det;
    std::vector<double> rnd;
    for (const auto& r : t.rows) {
      EXPECT_GE(r.deterministic_gap, 0.0);
      EXPECT_GE(r.random_gap, 0.0);
      det.push_back(r.deterministic_gap);
      rnd.push_back(r.random_gap);
    }
    EXPECT_TRUE(nonincreasing(det)) << triple.name();
    EXPECT_TRUE(nonincreasing(rnd)) << triple.name();
    EXPECT_LT(det.back(), 2e-3) << triple.name();
    EXPECT_LT(rnd.back(), 2e-3) << triple.name();
  }
}

TEST(PairedConvergence, DegenerateColumnsCoincide) {
  for (const auto& base : {BaseDistribution::pareto(2.0), BaseDistribution::unit_exponential()}) {
    const auto t = run_thm24(LaplaceFamily::degenerate(), AttractionTriple(base), ns());
    for (const auto& p : t.points) EXPECT_NEAR(p.random_gap, p.deterministic_gap, 1e-14);
  }
}

TEST(PairedConvergence, RejectsMittagLeffler) {
  EXPECT_THROW(run_thm24(LaplaceFamily::mittag_leffler(0.5), kPareto1, ns()), ConfigError);
}

std::vector<double> regular(double lo, double hi, int cells) {
  std::vector<double> grid;
  for (int i = 0; i <= cells; ++i) grid.push_back(lo + (hi - lo) * i / cells);
  return grid;
}

// Doubling the density of a regular grid over the standard range changes no
// sup gap by more than 10%.
TEST(PairedConvergence, GridRefinementStable) {
  for (const auto& base : {BaseDistribution::pareto(1.0), BaseDistribution::unit_exponential(),
                           BaseDistribution::uniform()}) {
    const AttractionTriple triple(base);
    const auto standard = standard_grid(triple.target().marginals()[0]);
    const auto coarse = regular(standard.front(), standard.back(), 20);
    const auto fine = regular(standard.front(), standard.back(), 40);
    const auto a = run_thm24(LaplaceFamily::geometric(), triple, ns(), coarse);
    const auto b = run_thm24(LaplaceFamily::geometric(), triple, ns(), fine);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      EXPECT_LE(std::abs(b.rows[i].random_gap - a.rows[i].random_gap),
                0.1 * a.rows[i].random_gap)
          << triple.name() << " n=" << a.rows[i].n;
      EXPECT_LE(std::abs(b.rows[i].deterministic_gap - a.rows[i].deterministic_gap),
                0.1 * a.rows[i].deterministic_gap)
          << triple.name() << " n=" << a.rows[i].n;
    }
  }
}

TEST(Experiments, AnalyticOnesPass) {
  const auto thetas = default_thetas();
  for (const auto& family : {LaplaceFamily::geometric(), LaplaceFamily::degenerate(),
                             LaplaceFamily::mittag_leffler(0.5)}) {
    EXPECT_TRUE(experiment_poincare(family, thetas).pass()) << family.name();
    EXPECT_TRUE(experiment_definetti(family, kPareto1, ns()).pass()) << family.name();
    const NMaxStableLaw law(family, MaxStableLaw::univariate(Marginal::gumbel()));
    EXPECT_TRUE(experiment_thm31(law, thetas).pass()) << family.name();
  }
  for (const auto& base : {BaseDistribution::pareto(1.0), BaseDistribution::unit_exponential(),
                           BaseDistribution::uniform()}) {
    const AttractionTriple triple(base);
    EXPECT_TRUE(experiment_thm24(LaplaceFamily::geometric(), triple, ns()).pass())
        << triple.name();
    EXPECT_TRUE(experiment_doa_table(triple, ns()).pass()) << triple.name();
  }
}

TEST(Experiments, MonteCarloOnesPass) {
  EXPECT_TRUE(experiment_lemma12(LaplaceFamily::geometric(), 0.001, 100000, 3, 2).pass());
  const NMaxStableLaw law(LaplaceFamily::geometric(),
                          MaxStableLaw::univariate(Marginal::frechet(1.0)));
  EXPECT_TRUE(experiment_thm32(law, 100000, 42, 2).pass());
  const auto r = run_thm34(LaplaceFamily::geometric(), kPareto1, 1000, 20000, 5, 2);
  EXPECT_TRUE(r.pass());
}

TEST(Experiments, UniformTripleAnalyticGap) {
  const auto t = run_thm24(LaplaceFamily::geometric(),
                           AttractionTriple(BaseDistribution::uniform()),
                           std::vector<double>{1e4});
  EXPECT_LT(t.rows[0].random_gap, 1e-3);
}

TEST(Experiments, CompositionResidual) {
  const NMaxStableLaw law(LaplaceFamily::geometric(),
                          MaxStableLaw::univariate(Marginal::frechet(2.0)));
  EXPECT_LT(composition_residual(law), 1e-8);
}

TEST(Experiments, ReportsAreReproducible) {
  const NMaxStableLaw law(LaplaceFamily::mittag_leffler(0.5),
                          MaxStableLaw::univariate(Marginal::frechet(1.0)));
  const auto a = experiment_thm32(law, 10000, 7, 1);
  const auto b = experiment_thm32(law, 10000, 7, 3);
  EXPECT_EQ(summary_text(a), summary_text(b));
  for (std::size_t i = 0; i < a.tables.size(); ++i) {
    std::ostringstream sa;
    std::ostringstream sb;
    write_csv(a.tables[i], sa);
    write_csv(b.tables[i], sb);
    EXPECT_EQ(sa.str(), sb.str());
  }
}

TEST(ReportIo, CsvFormat) {
  Table empty{"empty", {"a", "b"}, {}};
  std::ostringstream out;
  write_csv(empty, out);
  EXPECT_EQ(out.str(), "a,b\n");

  Table t{"t", {"n", "x", "label"}, {{std::int64_t{3}, 0.1, std::string("a,b")}}};
  std::ostringstream out2;
  write_csv(t, out2);
  EXPECT_EQ(out2.str(), "n,x,label\n3,0.10000000000000001,\"a,b\"\n");

  const auto table = run_thm24(LaplaceFamily::geometric(), kPareto1, ns()).summary_table("s");
  std::ostringstream out3;
  write_csv(table, out3);
  const std::string text = out3.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}

TEST(ReportIo, WritesDirectoryAndFailsCleanly) {
  const auto dir = std::filesystem::temp_directory_path() / "randmax_report_io_test";
  std::filesystem::remove_all(dir);
  const auto report = experiment_poincare(LaplaceFamily::geometric(), default_thetas());
  write_report(report, dir);
  EXPECT_TRUE(std::filesystem::exists(dir / "summary.txt"));
  for (const auto& t : report.tables) {
    EXPECT_TRUE(std::filesystem::exists(dir / (t.name + ".csv")));
  }
  std::ifstream in(dir / "summary.txt");
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("result: PASS"), std::string::npos);
  std::filesystem::remove_all(dir);

  const Table t{"t", {"a"}, {}};
  EXPECT_THROW(emit_csv(t, "/proc/definitely/not/here.csv"), IoError);
}

}  // namespace
}  // namespace randmax
