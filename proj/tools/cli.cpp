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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "randmax/errors.hpp"
#include "randmax/extremal_proc.hpp"
#include "randmax/nmid_compose.hpp"
#include "randmax/report_io.hpp"
#include "randmax/verify_harness.hpp"

namespace randmax::cli {
namespace {

struct Experiment {
  const char* command;
  const char* name;
  const char* description;
};

// The theorem references are part of the CLI contract: each experiment is
// labelled with the result it reproduces.
constexpr Experiment kExperiments[] = {
    {"verify", "poincare",
     "Poincare identity P_theta(phi(theta s)) = phi(s) and phi^-1 round trip "
     "(Definition 2.1)"},
    {"verify", "lemma12", "theta N_theta -> U with Laplace transform phi (Lemma 1.2)"},
    {"verify", "definetti",
     "phi(n(1 - G(a_n x + b_n))) -> phi(-log H) and Poisson maxima "
     "(Theorems 1.1 and 2.2)"},
    {"verify", "thm24",
     "paired limits G^n -> H and P_{1/n}(G) -> phi(-log H) (Theorem 2.4)"},
    {"verify", "thm31", "same-type decomposition F = P_theta(F_theta) (Theorem 3.1)"},
    {"verify", "thm32",
     "exponent-measure form and subordination F = P{Y(Z) <= x} "
     "(Theorems 2.3 and 3.2)"},
    {"verify", "thm34",
     "domain of random max-attraction equals classical domain "
     "(Theorems 3.3 and 3.4)"},
    {"sample", "randmax", "draws of the random maximum of N_theta base draws (Corollary 2.1)"},
    {"sample", "mixer", "draws of the limit mixer U (Lemma 1.2)"},
    {"sample", "count", "draws of the count N_theta (Definition 2.1)"},
    {"sample", "extremal-marginal", "draws of Y(t) for a max-stable law (Theorem 3.2)"},
    {"extremal", "path", "jump-chain paths of the extremal process (Theorem 3.2(iv))"},
    {"table", "doa", "domain-of-attraction gaps over n (Definition 3.2)"},
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double to_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse " + what + " from '" + text + "'");
  }
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

Dependence parse_dependence(const std::string& text, double& r) {
  const auto parts = split(lower(text), ':');
  if (parts.empty()) throw ConfigError("empty dependence");
  if (parts[0] == "independence" && parts.size() == 1) {
    return Dependence::Independence;
  }
  if ((parts[0] == "complete" || parts[0] == "complete-dependence") &&
      parts.size() == 1) {
    return Dependence::CompleteDependence;
  }
  if (parts[0] == "logistic" && parts.size() == 2) {
    r = to_double(parts[1], "logistic r");
    return Dependence::Logistic;
  }
  throw ConfigError("unknown dependence '" + text +
                    "' (expected independence, complete, logistic:r)");
}

std::uint64_t sample_count(const RunConfig& c, std::uint64_t fallback) {
  const std::uint64_t n = c.n.value_or(fallback);
  if (n == 0) throw ConfigError("--n must be >= 1");
  return n;
}

NMaxStableLaw parse_nlaw(const RunConfig& c) {
  return NMaxStableLaw(parse_family(c.family, c.nu), parse_law(c));
}

ExperimentReport sample_report(const std::string& name, Table table,
                               std::uint64_t seed,
                               std::vector<std::pair<std::string, std::string>>
                                   parameters) {
  ExperimentReport report;
  report.name = name;
  report.seed = seed;
  report.parameters = std::move(parameters);
  report.tables.push_back(std::move(table));
  return report;
}

std::vector<std::string> columns(const std::string& stem, std::size_t d) {
  std::vector<std::string> header;
  for (std::size_t i = 0; i < d; ++i) header.push_back(stem + std::to_string(i + 1));
  return header;
}

ExperimentReport dispatch(const RunConfig& c) {
  const std::string& e = c.experiment;
  const std::vector<double> thetas = c.thetas.empty() ? default_thetas() : c.thetas;

  if (c.command == "verify") {
    if (e == "poincare") {
      return experiment_poincare(parse_family(c.family, c.nu), thetas);
    }
    if (e == "lemma12") {
      return experiment_lemma12(parse_family(c.family, c.nu),
                                c.theta.value_or(0.001), sample_count(c, 100000),
                                c.seed, c.threads);
    }
    if (e == "definetti" || e == "thm24") {
      const auto ns = c.ns.empty() ? default_limit_ns() : c.ns;
      const auto family = parse_family(c.family, c.nu);
      const AttractionTriple triple(parse_base(c.base));
      return e == "definetti" ? experiment_definetti(family, triple, ns, c.grid)
                              : experiment_thm24(family, triple, ns, c.grid);
    }
    if (e == "thm31") return experiment_thm31(parse_nlaw(c), thetas);
    if (e == "thm32") {
      return experiment_thm32(parse_nlaw(c), sample_count(c, 100000), c.seed,
                              c.threads);
    }
    if (e == "thm34") {
      const auto ns = c.ns.empty() ? std::vector<double>{10000} : c.ns;
      const auto family = parse_family(c.family, c.nu);
      const AttractionTriple triple(parse_base(c.base));
      const std::uint64_t m = sample_count(c, 100000);
      ExperimentReport merged;
      for (const double n : ns) {
        ExperimentReport one =
            run_thm34(family, triple, n, m, c.seed, c.threads, c.grid);
        if (merged.name.empty()) {
          merged = std::move(one);
          continue;
        }
        // One row per n in the same table.
        merged.tables[0].rows.push_back(one.tables[0].rows[0]);
        for (auto& check : one.checks) {
          check.name += " (n=" + std::to_string(static_cast<long long>(n)) + ")";
          merged.checks.push_back(std::move(check));
        }
      }
      return merged;
    }
  }

  if (c.command == "sample") {
    const std::uint64_t n = sample_count(c, 1000);
    if (e == "randmax") {
      const CountScheme scheme(parse_family(c.family, c.nu), c.theta.value_or(0.5));
      std::vector<BaseDistribution> parts;
      for (const auto& piece : split(c.base, '*')) parts.push_back(parse_base(piece));
      const ProductBase base(parts);
      const auto draws = sample_random_max_batch(scheme, base, n, c.seed, c.threads);
      Table table{"randmax", columns("x", base.dim()), {}};
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Cell> row;
        for (std::size_t j = 0; j < base.dim(); ++j) row.emplace_back(draws[i * base.dim() + j]);
        table.rows.push_back(std::move(row));
      }
      return sample_report("randmax", std::move(table), c.seed,
                           {{"family", scheme.family().name()},
                            {"theta", std::to_string(scheme.theta())},
                            {"base", base.name()}});
    }
    if (e == "mixer" || e == "count") {
      const auto family = parse_family(c.family, c.nu);
      Table table{e, {e == "mixer" ? "u" : "k"}, {}};
      table.rows.resize(n);
      if (e == "mixer") {
        const Mixer mixer(family);
        for_each_chunk(n, c.seed, c.threads,
                       [&](std::size_t, std::size_t b, std::size_t end, Stream& rng) {
                         for (std::size_t i = b; i < end; ++i) {
                           table.rows[i] = {mixer.sample(rng)};
                         }
                       });
      } else {
        const CountScheme scheme(family, c.theta.value_or(0.5));
        for_each_chunk(n, c.seed, c.threads,
                       [&](std::size_t, std::size_t b, std::size_t end, Stream& rng) {
                         for (std::size_t i = b; i < end; ++i) {
                           table.rows[i] = {static_cast<std::int64_t>(scheme.sample(rng))};
                         }
                       });
      }
      return sample_report(e, std::move(table), c.seed, {{"family", family.name()}});
    }
    if (e == "extremal-marginal") {
      const MaxStableLaw law = parse_law(c);
      if (!(c.t > 0.0)) throw ConfigError("--t must be > 0");
      const std::size_t d = law.dim();
      std::vector<double> draws(n * d);
      for_each_chunk(n, c.seed, c.threads,
                     [&](std::size_t, std::size_t b, std::size_t end, Stream& rng) {
                       for (std::size_t i = b; i < end; ++i) {
                         sample_y_at_time(law, c.t, rng,
                                          std::span<double>(draws.data() + i * d, d));
                       }
                     });
      Table table{"extremal_marginal", columns("x", d), {}};
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Cell> row;
        for (std::size_t j = 0; j < d; ++j) row.emplace_back(draws[i * d + j]);
        table.rows.push_back(std::move(row));
      }
      return sample_report("extremal-marginal", std::move(table), c.seed,
                           {{"law", law.name()}, {"t", std::to_string(c.t)}});
    }
  }

  if (c.command == "extremal" && e == "path") {
    const MaxStableLaw law = parse_law(c);
    const std::uint64_t n = sample_count(c, 10);
    const double floor = c.floor.value_or(default_floor(law, c.horizon));
    std::vector<ExtremalPath> paths(n);
    for_each_chunk(n, c.seed, c.threads,
                   [&](std::size_t, std::size_t b, std::size_t end, Stream& rng) {
                     for (std::size_t i = b; i < end; ++i) {
                       paths[i] = simulate_path(law, c.horizon, floor, rng);
                     }
                   });
    Table table{"extremal_path", {"path_id", "time", "state"}, {}};
    bool monotone = true;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& jumps = paths[i].jumps;
      for (std::size_t k = 0; k < jumps.size(); ++k) {
        if (k && !(jumps[k].state > jumps[k - 1].state && jumps[k].time > jumps[k - 1].time)) {
          monotone = false;
        }
        table.rows.push_back({static_cast<std::int64_t>(i), jumps[k].time, jumps[k].state});
      }
    }
    ExperimentReport report = sample_report(
        "extremal-path", std::move(table), c.seed,
        {{"law", law.name()}, {"horizon", std::to_string(c.horizon)},
         {"floor", std::to_string(floor)}, {"paths", std::to_string(n)}});
    report.add_check("path states and times strictly increasing", monotone);
    return report;
  }

  if (c.command == "table" && e == "doa") {
    const auto ns = c.ns.empty() ? default_limit_ns() : c.ns;
    return experiment_doa_table(AttractionTriple(parse_base(c.base)), ns, c.grid);
  }

  throw ConfigError("unknown experiment '" + c.command + " " + e + "'");
}

std::string experiment_footer() {
  std::ostringstream out;
  out << "Experiments:\n";
  for (const auto& x : kExperiments) {
    std::string label = std::string(x.command) + " " + x.name;
    label.resize(std::max<std::size_t>(label.size() + 2, 26), ' ');
    out << "  " << label << x.description << '\n';
  }
  out << "\nLaw syntax:\n"
         "  --family   geometric | degenerate | mittag-leffler:NU\n"
         "  --base     pareto:ALPHA | exponential | uniform  (sample randmax:\n"
         "             join components with '*' for a product base)\n"
         "  --marginal frechet:ALPHA | gumbel | reverse-weibull:ALPHA\n"
         "  --dependence none | independence | complete | logistic:R\n"
         "\nExit status: 0 all checks pass, 1 a check failed or I/O error,\n"
         "2 configuration error. RANDMAX_SEED sets the default seed.\n";
  return out.str();
}

}  // namespace

LaplaceFamily parse_family(const std::string& text, std::optional<double> nu) {
  const auto parts = split(lower(text), ':');
  if (parts.empty()) throw ConfigError("empty family");
  const std::string& kind = parts[0];
  if (kind == "geometric" && parts.size() == 1) return LaplaceFamily::geometric();
  if (kind == "degenerate" && parts.size() == 1) return LaplaceFamily::degenerate();
  if (kind == "mittag-leffler" || kind == "mittagleffler" || kind == "ml") {
    if (parts.size() == 2) return LaplaceFamily::mittag_leffler(to_double(parts[1], "nu"));
    if (parts.size() == 1 && nu) return LaplaceFamily::mittag_leffler(*nu);
    throw ConfigError("mittag-leffler family needs an index, e.g. mittag-leffler:0.5");
  }
  throw ConfigError("unknown family '" + text +
                    "' (expected geometric, degenerate, mittag-leffler:NU)");
}

BaseDistribution parse_base(const std::string& text) {
  const auto parts = split(lower(text), ':');
  if (parts.empty()) throw ConfigError("empty base");
  if (parts[0] == "pareto" && parts.size() == 2) {
    return BaseDistribution::pareto(to_double(parts[1], "Pareto index"));
  }
  if ((parts[0] == "exponential" || parts[0] == "unit-exponential") && parts.size() == 1) {
    return BaseDistribution::unit_exponential();
  }
  if (parts[0] == "uniform" && parts.size() == 1) return BaseDistribution::uniform();
  throw ConfigError("unknown base '" + text +
                    "' (expected pareto:ALPHA, exponential, uniform)");
}

Marginal parse_marginal(const std::string& text, double loc, double scale) {
  const auto parts = split(lower(text), ':');
  if (parts.empty()) throw ConfigError("empty marginal");
  if (parts[0] == "frechet" && parts.size() == 2) {
    return Marginal::frechet(to_double(parts[1], "Frechet alpha"), loc, scale);
  }
  if (parts[0] == "gumbel" && parts.size() == 1) return Marginal::gumbel(loc, scale);
  if ((parts[0] == "reverse-weibull" || parts[0] == "weibull") && parts.size() == 2) {
    return Marginal::reverse_weibull(to_double(parts[1], "reverse Weibull alpha"), loc,
                                     scale);
  }
  throw ConfigError("unknown marginal '" + text +
                    "' (expected frechet:ALPHA, gumbel, reverse-weibull:ALPHA)");
}

MaxStableLaw parse_law(const RunConfig& config) {
  const Marginal first = parse_marginal(config.marginal, config.loc, config.scale);
  if (lower(config.dependence) == "none") {
    if (!config.marginal2.empty()) {
      throw ConfigError("--marginal2 needs a bivariate --dependence");
    }
    return MaxStableLaw::univariate(first);
  }
  double r = 1.0;
  const Dependence dep = parse_dependence(config.dependence, r);
  const Marginal second =
      config.marginal2.empty()
          ? first
          : parse_marginal(config.marginal2, config.loc, config.scale);
  return MaxStableLaw::bivariate(first, second, dep, r);
}

std::uint64_t default_seed() {
  constexpr std::uint64_t kFallback = 20260101;
  const char* env = std::getenv("RANDMAX_SEED");
  if (env == nullptr || *env == '\0') return kFallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 0);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  return kFallback;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig config;
  config.seed = default_seed();

  CLI::App app{"randmax: random max-infinitely divisible and random max-stable laws",
               "randmax"};
  app.footer(experiment_footer());
  app.set_config("--config", "", "flat key=value file mirroring the flags");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  app.add_option("--family", config.family, "Laplace family")->capture_default_str();
  app.add_option("--nu", config.nu, "Mittag-Leffler index in (0, 1)");
  app.add_option("--theta", config.theta, "count parameter theta");
  app.add_option("--thetas", config.thetas, "theta list (default 0.5,0.1,0.01)")
      ->delimiter(',');
  app.add_option("--ns", config.ns, "index list n (default 10,100,1000,10000)")
      ->delimiter(',');
  app.add_option("--base,--triple", config.base,
                 "base d.f. G; its attraction triple is implied")
      ->capture_default_str();
  app.add_option("--marginal", config.marginal, "max-stable marginal type")
      ->capture_default_str();
  app.add_option("--marginal2", config.marginal2,
                 "second marginal (bivariate; default: same as --marginal)");
  app.add_option("--dependence", config.dependence, "bivariate dependence")
      ->capture_default_str();
  app.add_option("--loc", config.loc, "marginal location")->capture_default_str();
  app.add_option("--scale", config.scale, "marginal scale")->capture_default_str();
  app.add_option("--n", config.n, "sample count / number of draws or paths");
  app.add_option("--t", config.t, "time for extremal-marginal")->capture_default_str();
  app.add_option("--horizon", config.horizon, "path horizon T")->capture_default_str();
  app.add_option("--floor", config.floor,
                 "path floor (default: 0.1% quantile of Y(T/1000))");
  app.add_option("--seed", config.seed, "64-bit seed (default $RANDMAX_SEED)")
      ->capture_default_str();
  app.add_option("--threads", config.threads, "worker threads")
      ->capture_default_str()
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--output", config.output,
                 "output directory for CSV tables and summary.txt");
  app.add_option("--grid", config.grid, "evaluation grid override")->delimiter(',');

  struct Group {
    const char* name;
    const char* description;
  };
  constexpr Group kGroups[] = {
      {"verify", "run a verification experiment"},
      {"sample", "draw samples"},
      {"extremal", "simulate extremal-process paths"},
      {"table", "tabulate analytic quantities"},
  };
  for (const auto& group : kGroups) {
    auto* sub = app.add_subcommand(group.name, group.description);
    sub->fallthrough();
    sub->require_subcommand(1);
    for (const auto& x : kExperiments) {
      if (std::string(x.command) != group.name) continue;
      auto* leaf = sub->add_subcommand(x.name, x.description);
      leaf->fallthrough();
      leaf->callback([&config, group, x] {
        config.command = group.name;
        config.experiment = x.name;
      });
    }
  }

  std::vector<const char*> argv;
  argv.push_back("randmax");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  try {
    const ExperimentReport report = dispatch(config);
    if (!config.output.empty()) write_report(report, config.output);
    if ((config.command == "sample" || config.command == "extremal") &&
        config.output.empty()) {
      write_csv(report.tables.front(), out);
    } else {
      out << summary_text(report);
    }
    return report.pass() ? kExitPass : kExitFail;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace randmax::cli
