// Copyright 2026 The hanabi-qd Authors
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

#include <filesystem>
#include <stdexcept>
#include <string>

#include "hanabi_qd/map_elites.hpp"
#include "json.hpp"

namespace hanabi_qd {

class CatalogMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ArchiveFile {
  QdConfig config;
  std::string catalog_hash;
  Archive archive;
};

nlohmann::json config_to_json(const QdConfig& config);
QdConfig config_from_json(const nlohmann::json& j);

nlohmann::json archive_to_json(const Archive& archive, const QdConfig& config);
// Throws CatalogMismatch if the file was written under another rule catalog.
ArchiveFile archive_from_json(const nlohmann::json& j);

// Writes to a temporary sibling and renames it over `path`.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
void save_archive(const std::filesystem::path& path, const Archive& archive, const QdConfig& config);
ArchiveFile load_archive(const std::filesystem::path& path);

}  // namespace hanabi_qd
