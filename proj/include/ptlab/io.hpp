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

#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "ptlab/measures.hpp"
#include "ptlab/types.hpp"

namespace ptlab::io {

/// Shortest form that round-trips: 17 significant digits, "nan"/"inf" kept.
std::string format_double(double v);

void write_reports_csv(std::ostream& out, const std::vector<MeasureReport>& rows);
/// Parses the layout produced by write_reports_csv. Throws
/// std::invalid_argument on a header or field mismatch.
std::vector<MeasureReport> read_reports_csv(std::istream& in);

nlohmann::ordered_json to_json(const MeasureReport& r);

/// Header line plus one row per entry of `columns[0]`.
void write_table_csv(std::ostream& out, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& columns);

/// Array of rows, each entry [re, im].
nlohmann::json matrix_to_json(const CMatrix& m);

}  // namespace ptlab::io
