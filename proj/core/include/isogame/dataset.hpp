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


#ifndef ISOGAME_DATASET_HPP_
#define ISOGAME_DATASET_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace isogame {

// A numeric table with named columns.
struct Dataset {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column(std::string_view name) const;  // throws if absent

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Shortest decimal string that parses back to exactly `v`.
std::string format_number(double v);

// Header row, then one line per row; ',' separators, '\n' line endings.
std::string to_csv(const Dataset& data);

// Inverse of to_csv(). Throws ParameterError on ragged or non-numeric rows.
Dataset parse_csv(std::string_view text, std::string name = {});

// {"name": ..., "columns": [...], "rows": [[...], ...]}
std::string to_json(const Dataset& data);

}  // namespace isogame

#endif  // ISOGAME_DATASET_HPP_
