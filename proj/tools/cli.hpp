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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "randmax/evd_core.hpp"
#include "randmax/lt_families.hpp"

namespace randmax::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfig = 2;

// Everything a run needs, as parsed from flags (and optionally a key=value
// config file). Empty optionals mean "use the subcommand default".
struct RunConfig {
  std::string command;     // verify | sample | extremal | table
  std::string experiment;  // poincare, thm32, randmax, path, doa, ...
  std::string family = "geometric";
  std::optional<double> nu;
  std::optional<double> theta;
  std::vector<double> thetas;
  std::vector<double> ns;
  std::string base = "pareto:1";
  std::string marginal = "frechet:1";
  std::string marginal2;
  std::string dependence = "none";
  double loc = 0.0;
  double scale = 1.0;
  std::optional<std::uint64_t> n;
  double t = 1.0;
  double horizon = 1.0;
  std::optional<double> floor;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string output;
  std::vector<double> grid;
};

// Parsers for the textual law specifications used on the command line.
LaplaceFamily parse_family(const std::string& text,
                           std::optional<double> nu = std::nullopt);
BaseDistribution parse_base(const std::string& text);
Marginal parse_marginal(const std::string& text, double loc = 0.0,
                        double scale = 1.0);
MaxStableLaw parse_law(const RunConfig& config);

// Seed default: RANDMAX_SEED if set and valid, else 20260101.
std::uint64_t default_seed();

// Runs the command line. Returns 0 iff every check passed, 1 on a failed
// verification or I/O error, 2 on a configuration error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace randmax::cli
