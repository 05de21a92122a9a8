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

#include "hanabi_qd/archive_io.hpp"

#include <fstream>
#include <sstream>

#include "hanabi_qd/rules.hpp"

namespace hanabi_qd {

nlohmann::json config_to_json(const QdConfig& config) {
  return {
      {"total_individuals", config.total_individuals},
      {"random_init_count", config.random_init_count},
      {"games_per_eval", config.games_per_eval},
      {"master_seed", config.master_seed},
      {"batch_size", config.batch_size},
      {"checkpoint_every", config.checkpoint_every},
      {"frozen_seeds", config.frozen_seeds},
  };
}

QdConfig config_from_json(const nlohmann::json& j) {
  QdConfig config;
  config.total_individuals = j.at("total_individuals").get<uint64_t>();
  config.random_init_count = j.at("random_init_count").get<uint64_t>();
  config.games_per_eval = j.at("games_per_eval").get<int>();
  config.master_seed = j.at("master_seed").get<uint64_t>();
  config.batch_size = j.value("batch_size", 1);
  config.checkpoint_every = j.value("checkpoint_every", uint64_t{10'000});
  config.frozen_seeds = j.value("frozen_seeds", false);
  return config;
}

nlohmann::json archive_to_json(const Archive& archive, const QdConfig& config) {
  nlohmann::json j;
  j["config"] = config_to_json(config);
  j["rule_catalog_hash"] = catalog_hash();
  auto& entries = j["entries"] = nlohmann::json::array();
  for (const Elite& e : archive.elites()) {
    const NicheCoord n = e.niche();
    nlohmann::json genes = nlohmann::json::array();
    for (uint8_t g : e.chromosome.genes) genes.push_back(static_cast<int>(g));
    entries.push_back({
        {"niche", {n.ci, n.ri}},
        {"genes", genes},
        {"fitness", e.fitness},
        {"games_played", e.games_played},
        {"fitness_sd", e.fitness_sd},
        {"descriptor", {e.descriptor.communicativeness, e.descriptor.risk_aversion}},
        {"individual", e.individual},
        {"lineage_seed", e.lineage_seed},
    });
  }
  return j;
}

ArchiveFile archive_from_json(const nlohmann::json& j) {
  ArchiveFile file;
  file.catalog_hash = j.at("rule_catalog_hash").get<std::string>();
  if (file.catalog_hash != catalog_hash())
    throw CatalogMismatch("archive was written with rule catalog " + file.catalog_hash + " but this build uses " +
                          catalog_hash() + "; refusing to load");
  file.config = config_from_json(j.at("config"));
  for (const auto& entry : j.at("entries")) {
    Elite e;
    const auto& genes = entry.at("genes");
    if (genes.size() != kChromosomeLength) throw std::runtime_error("archive entry must have 15 genes");
    for (int i = 0; i < kChromosomeLength; ++i) {
      const int g = genes[i].get<int>();
      if (g < 0 || g >= kNumRules) throw std::runtime_error("archive gene out of range");
      e.chromosome.genes[i] = static_cast<uint8_t>(g);
    }
    e.fitness = entry.at("fitness").get<double>();
    e.games_played = entry.at("games_played").get<int>();
    e.fitness_sd = entry.value("fitness_sd", 0.0);
    e.descriptor = {entry.at("descriptor")[0].get<double>(), entry.at("descriptor")[1].get<double>()};
    e.individual = entry.value("individual", uint64_t{0});
    e.lineage_seed = entry.value("lineage_seed", uint64_t{0});
    const NicheCoord key{entry.at("niche")[0].get<int>(), entry.at("niche")[1].get<int>()};
    if (!(key == e.niche())) throw std::runtime_error("archive entry niche does not match its descriptor");
    if (file.archive.at(key)) throw std::runtime_error("archive has two entries for one niche");
    file.archive.put(e);
  }
  return file;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void save_archive(const std::filesystem::path& path, const Archive& archive, const QdConfig& config) {
  write_text_atomic(path, archive_to_json(archive, config).dump(2) + "\n");
}

ArchiveFile load_archive(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read archive " + path.string());
  return archive_from_json(nlohmann::json::parse(in));
}

}  // namespace hanabi_qd
