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

#include "randmax/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "randmax/errors.hpp"

namespace randmax {
namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string format_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  return quote(std::get<std::string>(cell));
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << quote(table.header[i]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_cell(row[i]);
    }
    out << '\n';
  }
}

void emit_csv(const Table& table, const std::filesystem::path& path) {
  std::ostringstream text;
  write_csv(table, text);
  write_file(path, text.str());
}

std::string summary_text(const ExperimentReport& report) {
  std::ostringstream out;
  out << "experiment: " << report.name << '\n';
  out << "seed: " << report.seed << '\n';
  for (const auto& [key, value] : report.parameters) {
    out << "param " << key << ": " << value << '\n';
  }
  for (const auto& [key, value] : report.statistics) {
    out << "stat " << key << ": " << format_double(value) << '\n';
  }
  for (const auto& check : report.checks) {
    out << (check.pass ? "PASS " : "FAIL ") << check.name;
    if (!check.detail.empty()) out << " [" << check.detail << "]";
    out << '\n';
  }
  out << "result: " << (report.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

void write_report(const ExperimentReport& report,
                  const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  for (const auto& table : report.tables) {
    emit_csv(table, dir / (table.name + ".csv"));
  }
  write_file(dir / "summary.txt", summary_text(report));
}

}  // namespace randmax
