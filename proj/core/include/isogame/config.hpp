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


#ifndef ISOGAME_CONFIG_HPP_
#define ISOGAME_CONFIG_HPP_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isogame/scenario.hpp"

namespace isogame {

// A config file that cannot be read, parsed, or validated. Carries the
// 1-based line (parse errors) or the key (validation errors) at fault.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::size_t line, std::string key)
      : std::runtime_error(what), line_(line), key_(std::move(key)) {}

  std::size_t line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  std::size_t line_;
  std::string key_;
};

// Every key the config format accepts, in serialization order.
const std::vector<std::string_view>& config_keys();

// Parses line-oriented `key = value` text. Blank lines and lines starting
// with '#' are ignored; missing keys keep their ScenarioConfig defaults.
ScenarioConfig parse_config(std::string_view text);

ScenarioConfig load_config(const std::filesystem::path& path);

// Writes every key, numbers in shortest round-trip form, so that
// parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

// Applies a single `key`/`value` pair on top of an existing config (used
// for command-line overrides). Throws ConfigError.
void apply_config_value(ScenarioConfig& config, std::string_view key,
                        std::string_view value, std::size_t line = 0);

// Re-checks the whole config, reporting the first bad key as a ConfigError.
void check_config(const ScenarioConfig& config);

}  // namespace isogame

#endif  // ISOGAME_CONFIG_HPP_
