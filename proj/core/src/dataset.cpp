// Copyright 2026 The isogame Authors
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


#include "isogame/dataset.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "isogame/errors.hpp"
#include <nlohmann/json.hpp>

namespace isogame {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_number(std::string_view s) {
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParameterError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::size_t Dataset::column(std::string_view wanted) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == wanted) return i;
  }
  throw ParameterError("dataset '" + name + "' has no column '" +
                       std::string(wanted) + "'");
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string to_csv(const Dataset& data) {
  std::string out;
  for (std::size_t c = 0; c < data.columns.size(); ++c) {
    if (c) out += ',';
    out += data.columns[c];
  }
  out += '\n';
  for (const auto& row : data.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

Dataset parse_csv(std::string_view text, std::string name) {
  Dataset data;
  data.name = std::move(name);
  bool header = true;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (header) {
      for (auto f : fields) data.columns.emplace_back(f);
      header = false;
      continue;
    }
    if (fields.size() != data.columns.size()) {
      throw ParameterError("csv line " + std::to_string(line_no) + " has " +
                           std::to_string(fields.size()) + " fields, expected " +
                           std::to_string(data.columns.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (auto f : fields) row.push_back(parse_number(f));
    data.rows.push_back(std::move(row));
  }
  if (header) throw ParameterError("csv is missing its header row");
  return data;
}

std::string to_json(const Dataset& data) {
  nlohmann::ordered_json j;
  j["name"] = data.name;
  j["columns"] = data.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : data.rows) {
    auto r = nlohmann::ordered_json::array();
    for (double v : row) {
      // JSON has no infinity; mirror the CSV token as a string.
      if (std::isfinite(v)) {
        r.push_back(v);
      } else {
        r.push_back(format_number(v));
      }
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace isogame
