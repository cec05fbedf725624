// Copyright 2026 The ptlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ptlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ptlab::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_reports_csv(std::ostream& out, const std::vector<MeasureReport>& rows) {
  const auto& cols = measure_report_columns();
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
  out << '\n';
  for (const auto& r : rows) {
    out << r.trial << ',' << r.n1 << ',' << r.n2 << ',' << r.n3 << ',' << to_string(r.field) << ','
        << format_double(r.purity) << ',' << format_double(r.entropy) << ','
        << format_double(r.negativity) << ',' << format_double(r.log_negativity) << ','
        << format_double(r.mu_min) << ',' << (r.is_npt ? 1 : 0) << ','
        << (r.skewness ? format_double(*r.skewness) : std::string()) << ','
        << format_double(r.m3_pt) << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::nan("");
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

}  // namespace

std::vector<MeasureReport> read_reports_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty report CSV");
  const auto& cols = measure_report_columns();
  if (split(line) != cols) throw std::invalid_argument("unexpected report CSV header");
  std::vector<MeasureReport> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != cols.size()) {
      throw std::invalid_argument("report CSV line " + std::to_string(line_no) + ": wrong field count");
    }
    try {
      MeasureReport r;
      r.trial = std::stoull(f[0]);
      r.n1 = std::stoll(f[1]);
      r.n2 = std::stoll(f[2]);
      r.n3 = std::stoll(f[3]);
      r.field = parse_field(f[4]);
      r.purity = parse_double(f[5]);
      r.entropy = parse_double(f[6]);
      r.negativity = parse_double(f[7]);
      r.log_negativity = parse_double(f[8]);
      r.mu_min = parse_double(f[9]);
      r.is_npt = f[10] == "1";
      if (!f[11].empty()) r.skewness = parse_double(f[11]);
      r.m3_pt = parse_double(f[12]);
      r.negative_count = r.is_npt ? 1 : 0;  // not serialized; at least one when NPT
      rows.push_back(r);
    } catch (const std::logic_error& e) {
      throw std::invalid_argument("report CSV line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

nlohmann::ordered_json to_json(const MeasureReport& r) {
  nlohmann::ordered_json j;
  auto num = [](double v) -> nlohmann::ordered_json {
    if (std::isfinite(v)) return v;
    return nullptr;
  };
  j["trial"] = r.trial;
  j["N1"] = r.n1;
  j["N2"] = r.n2;
  j["N3"] = r.n3;
  j["field"] = to_string(r.field);
  j["purity"] = num(r.purity);
  j["entropy"] = num(r.entropy);
  j["negativity"] = num(r.negativity);
  j["log_negativity"] = num(r.log_negativity);
  j["mu_min"] = num(r.mu_min);
  j["is_npt"] = r.is_npt;
  j["skewness"] = r.skewness ? num(*r.skewness) : nullptr;
  j["m3_pt"] = num(r.m3_pt);
  return j;
}

void write_table_csv(std::ostream& out, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size()) throw std::invalid_argument("header/column count mismatch");
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << '\n';
  const std::size_t rows = columns.empty() ? 0 : columns[0].size();
  for (const auto& c : columns) {
    if (c.size() != rows) throw std::invalid_argument("columns differ in length");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << format_double(columns[c][r]);
    out << '\n';
  }
}

nlohmann::json matrix_to_json(const CMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ptlab::io
