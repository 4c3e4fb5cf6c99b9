// Copyright 2026 The tropcx Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arrangement_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tropcx::tools {
namespace {

Rational entry_value(const nlohmann::json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw std::invalid_argument("arrangement entries must be rational strings such as \"-8\" or \"3/2\"");
}

std::size_t dimension_field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned() || doc[key].get<std::size_t>() == 0) {
    throw std::invalid_argument(std::string("arrangement file needs a positive integer \"") + key + "\"");
  }
  return doc[key].get<std::size_t>();
}

}  // namespace

Arrangement parse_arrangement(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("arrangement file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("arrangement file must be a JSON object");
  const std::size_t rows = dimension_field(doc, "rows");
  const std::size_t cols = dimension_field(doc, "cols");
  const auto& entries = doc.value("entries", nlohmann::json());
  if (!entries.is_array() || entries.size() != rows) {
    throw std::invalid_argument("\"entries\" must be an array of " + std::to_string(rows) + " rows");
  }
  std::vector<Rational> data;
  data.reserve(rows * cols);
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols) {
      throw std::invalid_argument("every row of \"entries\" must have " + std::to_string(cols) + " values");
    }
    for (const auto& v : row) data.push_back(entry_value(v));
  }
  return Arrangement(RationalMatrix(rows, cols, std::move(data)));
}

Arrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open arrangement file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_arrangement(buffer.str());
}

nlohmann::json arrangement_to_json(const Arrangement& arr) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < arr.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < arr.cols(); ++j) row.push_back(arr(i, j).to_string());
    entries.push_back(std::move(row));
  }
  return {{"rows", arr.rows()}, {"cols", arr.cols()}, {"entries", std::move(entries)}};
}

nlohmann::json complex_report(const TropicalComplex& complex) {
  nlohmann::json cells = nlohmann::json::array();
  for (const TypeCell& cell : complex.cells()) {
    nlohmann::json type = nlohmann::json::array();
    for (IndexSet col : cell.type.columns()) {
      nlohmann::json rows = nlohmann::json::array();
      for_each_index(col, [&](std::size_t i) { rows.push_back(i + 1); });
      type.push_back(std::move(rows));
    }
    cells.push_back({{"type", std::move(type)}, {"dimension", cell.dimension}, {"bounded", cell.bounded}});
  }
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [dim, count] : complex.counts_by_dimension()) summary[std::to_string(dim)] = count;
  return {{"cells", std::move(cells)}, {"summary", std::move(summary)}};
}

std::string complex_report_text(const TropicalComplex& complex) {
  return complex_report(complex).dump(2) + "\n";
}

}  // namespace tropcx::tools
