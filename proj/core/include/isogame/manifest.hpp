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


#ifndef ISOGAME_MANIFEST_HPP_
#define ISOGAME_MANIFEST_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "isogame/scenario.hpp"

namespace isogame {

// Library version string baked in at build time.
std::string_view version();

// Lower-case hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

struct ManifestEntry {
  std::string file;
  std::string sha256;
  std::uint64_t bytes = 0;
};

// Everything needed to regenerate a set of output files.
struct RunManifest {
  std::string command;  // e.g. "figure F4"
  ScenarioConfig config;
  std::vector<ManifestEntry> outputs;

  // Hashes `contents` and writes it to dir/name, recording the entry.
  void write_output(const std::filesystem::path& dir, const std::string& name,
                    std::string_view contents);

  std::string to_json() const;
  // Writes dir/manifest.json.
  void save(const std::filesystem::path& dir) const;
};

}  // namespace isogame

#endif  // ISOGAME_MANIFEST_HPP_
