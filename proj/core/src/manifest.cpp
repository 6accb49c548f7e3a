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


#include "isogame/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <stdexcept>

#include "isogame/config.hpp"
#include <nlohmann/json.hpp>

#ifndef ISOGAME_VERSION
#define ISOGAME_VERSION "0.0.0"
#endif

namespace isogame {

std::string_view version() { return ISOGAME_VERSION; }

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len,
                 EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

void RunManifest::write_output(const std::filesystem::path& dir,
                               const std::string& name,
                               std::string_view contents) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("short write to " + (dir / name).string());
  outputs.push_back({name, sha256_hex(contents), contents.size()});
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = std::string(version());
  j["command"] = command;
  j["seed"] = config.seed;
  auto cfg = nlohmann::ordered_json::array();
  const std::string text = serialize_config(config);
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    cfg.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  j["config"] = std::move(cfg);
  auto files = nlohmann::ordered_json::array();
  for (const ManifestEntry& e : outputs) {
    files.push_back({{"file", e.file}, {"sha256", e.sha256}, {"bytes", e.bytes}});
  }
  j["outputs"] = std::move(files);
  return j.dump(2) + "\n";
}

void RunManifest::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / "manifest.json", std::ios::binary | std::ios::trunc);
  const std::string text = to_json();
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("cannot write manifest.json");
}

}  // namespace isogame
