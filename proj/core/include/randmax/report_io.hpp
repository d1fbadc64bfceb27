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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "randmax/verify_harness.hpp"

namespace randmax {

// Doubles use 17 significant digits ("%.17g"), integers are printed as is,
// strings containing a comma, quote or newline are quoted.
std::string format_cell(const Cell& cell);

// Header row, then one line per row; "," separated, "\n" terminated.
void write_csv(const Table& table, std::ostream& out);

// write_csv to a file. Throws IoError on failure.
void emit_csv(const Table& table, const std::filesystem::path& path);

// Plain-text summary: parameters, statistics, one PASS/FAIL line per check.
std::string summary_text(const ExperimentReport& report);

// Writes <dir>/<table>.csv for every table and <dir>/summary.txt, creating
// dir if needed. Throws IoError on failure.
void write_report(const ExperimentReport& report,
                  const std::filesystem::path& dir);

}  // namespace randmax
