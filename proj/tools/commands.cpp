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

#include "commands.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hanabi_qd/analysis.hpp"
#include "hanabi_qd/archive_io.hpp"
#include "hanabi_qd/rules.hpp"

namespace hanabi_qd::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr uint64_t kCorpusSeedTag = 1;
constexpr uint64_t kAnalysisSeedTag = 2;

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(6) << v;
  return out.str();
}

// Collects provenance for one command and writes it as manifest.json next
// to the artifacts it lists.
class Manifest {
 public:
  Manifest(std::string command, fs::path out) : out_(std::move(out)) {
    data_["command"] = std::move(command);
    data_["rule_catalog_hash"] = catalog_hash();
    data_["started"] = utc_now();
    data_["artifacts"] = json::array();
    data_["inputs"] = json::array();
    fs::create_directories(out_);
  }

  json& operator[](const char* key) { return data_[key]; }

  void input(const fs::path& path) { data_["inputs"].push_back(path.string()); }

  void write(const std::string& name, const std::string& text) {
    write_text_atomic(out_ / name, text);
    data_["artifacts"].push_back(name);
  }

  void finish() {
    data_["finished"] = utc_now();
    data_["artifacts"].push_back("manifest.json");
    write_text_atomic(out_ / "manifest.json", data_.dump(2) + "\n");
  }

 private:
  fs::path out_;
  json data_;
};

json niche_json(const NicheCoord& n) { return json::array({n.c_label(), n.r_label()}); }

std::string elites_csv(const Archive& archive) {
  std::ostringstream out;
  out << "c,r,fitness,games,fitness_sd,descriptor_c,descriptor_r,individual,genes\n";
  for (const Elite& e : archive.elites()) {
    const NicheCoord n = e.niche();
    out << fmt(n.c_label()) << ',' << fmt(n.r_label()) << ',' << fmt(e.fitness) << ',' << e.games_played << ','
        << fmt(e.fitness_sd) << ',' << fmt(e.descriptor.communicativeness) << ','
        << fmt(e.descriptor.risk_aversion) << ',' << e.individual << ",\"" << to_string(e.chromosome) << "\"\n";
  }
  return out.str();
}

StateCorpus build_corpus(const fs::path& archive_path, int games_each, uint64_t seed, WorkerPool& pool) {
  const ArchiveFile file = load_archive(archive_path);
  const std::vector<Elite> elites = file.archive.valid_elites();
  return collect_corpus(elites, games_each, derive_seed(seed, kCorpusSeedTag), &pool);
}

}  // namespace

int cmd_evolve(const EvolveOptions& o) {
  QdConfig config;
  config.master_seed = o.seed;
  config.total_individuals = o.individuals;
  config.random_init_count = o.init_random;
  config.games_per_eval = o.games_per_eval;
  config.batch_size = o.batch;
  config.checkpoint_every = o.checkpoint_every;
  config.frozen_seeds = o.frozen_seeds;
  config.validate();

  Manifest manifest("evolve", o.out);
  manifest["config"] = config_to_json(config);
  manifest["master_seed"] = config.master_seed;
  manifest["threads"] = o.threads;

  WorkerPool pool(o.threads);
  const auto checkpoint = [&](const Archive& archive, const RunStats& stats) {
    save_archive(o.out / "checkpoint.json", archive, config);
    if (!o.quiet)
      std::cerr << "individuals " << stats.individuals << "  occupied " << archive.size() << "  replacements "
                << stats.replacements << '\n';
  };
  RunStats stats;
  const Archive archive = run_map_elites(config, &pool, &stats, checkpoint);

  save_archive(o.out / "archive.json", archive, config);
  manifest["artifacts"].push_back("archive.json");
  if (fs::exists(o.out / "checkpoint.json")) manifest["artifacts"].push_back("checkpoint.json");

  double best = 0.0;
  for (const Elite& e : archive.elites()) best = std::max(best, e.fitness);
  manifest["stats"] = {
      {"individuals", stats.individuals},   {"evaluations", stats.evaluations},
      {"games", stats.games},               {"unnichable", stats.unnichable},
      {"inserts_into_empty", stats.inserts_into_empty}, {"contests", stats.contests},
      {"replacements", stats.replacements}, {"occupied", archive.size()},
      {"best_fitness", best},
  };
  manifest.finish();
  if (!o.quiet) std::cerr << "occupied " << archive.size() << " of " << kNumNiches << ", best " << best << '\n';
  return 0;
}

int cmd_reevaluate(const ReevaluateOptions& o) {
  const ArchiveFile file = load_archive(o.archive);
  Manifest manifest("reevaluate", o.out);
  manifest.input(o.archive);
  manifest["seed"] = o.seed;
  manifest["games_per_elite"] = o.games;
  manifest["games_planned"] = static_cast<uint64_t>(file.archive.size()) * static_cast<uint64_t>(o.games);

  WorkerPool pool(o.threads);
  std::vector<ReevalEntry> report;
  const Archive archive = reevaluate_archive(file.archive, o.games, o.seed, &pool, &report);

  save_archive(o.out / "archive.json", archive, file.config);
  manifest["artifacts"].push_back("archive.json");
  manifest.write("reevaluation.csv", reevaluation_csv(report));
  manifest.write("fitness_grid.csv", fitness_grid_csv(archive));

  const std::vector<Elite> valid = archive.valid_elites();
  double mean = 0.0;
  const Elite* best = nullptr;
  for (const Elite& e : valid) {
    mean += e.fitness / static_cast<double>(valid.size());
    if (!best || e.fitness > best->fitness) best = &e;
  }
  manifest["occupied"] = archive.size();
  manifest["valid_elites"] = valid.size();
  manifest["mean_valid_fitness"] = mean;
  if (best) {
    manifest["best_fitness"] = best->fitness;
    manifest["best_niche"] = niche_json(best->niche());
  }
  manifest.finish();
  return 0;
}

int cmd_crossplay(const CrossplayOptions& o) {
  const ArchiveFile file = load_archive(o.archive);
  const std::vector<Elite> pool_elites = file.archive.valid_elites();
  if (pool_elites.empty()) throw std::runtime_error("archive has no elites with nonzero fitness");

  Manifest manifest("crossplay", o.out);
  manifest.input(o.archive);
  manifest["seed"] = o.seed;
  manifest["games_per_pair"] = o.games_per_pair;
  manifest["pool_size"] = pool_elites.size();
  manifest["games_planned"] = planned_crossplay_games(pool_elites.size(), o.games_per_pair);
  if (o.plan_only) {
    manifest.finish();
    return 0;
  }

  WorkerPool workers(o.threads);
  const CrossplayMatrix matrix = crossplay(pool_elites, o.games_per_pair, o.seed, &workers);
  const BestPartners partners = best_partners(matrix);
  const std::vector<DistanceBucket> profile = manhattan_profile(matrix);

  manifest.write("crossplay_matrix.csv", crossplay_matrix_csv(matrix));
  manifest.write("agent_mean_grid.csv", agent_mean_grid_csv(matrix));
  manifest.write("best_partner_grid.csv", best_partner_grid_csv(matrix, partners));
  manifest.write("best_partners.csv", best_partner_list_csv(matrix, partners));
  manifest.write("distance_profile.csv", distance_profile_csv(profile));

  std::vector<double> distance, mean;
  for (const DistanceBucket& b : profile) {
    distance.push_back(b.distance);
    mean.push_back(b.mean);
  }
  const Correlation rho = spearman(distance, mean);
  manifest["games_played"] = matrix.total_games;
  manifest["self_play_mean"] = matrix.diagonal_mean();
  manifest["cross_play_mean"] = matrix.off_diagonal_mean();
  manifest["max_distance"] = profile.empty() ? 0 : profile.back().distance;
  manifest["distance_spearman"] = {{"rho", rho.rho}, {"p_value", rho.p_value}, {"n", rho.n}};
  manifest.finish();
  return 0;
}

int cmd_similarity(const SimilarityOptions& o) {
  const fs::path other = o.other.empty() ? o.archive : o.other;
  const fs::path corpus_source = o.corpus_archive.empty() ? o.archive : o.corpus_archive;
  const ArchiveFile a = load_archive(o.archive);
  const ArchiveFile b = load_archive(other);

  Manifest manifest("similarity", o.out);
  manifest.input(o.archive);
  manifest.input(other);
  manifest["corpus_archive"] = corpus_source.string();
  manifest["corpus_games"] = o.corpus_games;
  manifest["seed"] = o.seed;

  WorkerPool workers(o.threads);
  const StateCorpus corpus = build_corpus(corpus_source, o.corpus_games, o.seed, workers);
  if (corpus.records.empty()) throw std::runtime_error("corpus archive has no valid elites");

  std::vector<int> shared;
  for (int idx = 0; idx < kNumNiches; ++idx)
    if (a.archive.at(idx) && b.archive.at(idx)) shared.push_back(idx);
  std::vector<double> similarity(shared.size());
  workers.parallel_for(shared.size(), [&](size_t i) {
    similarity[i] =
        action_similarity(a.archive.at(shared[i])->chromosome, b.archive.at(shared[i])->chromosome, corpus);
  });

  std::ostringstream csv;
  csv << "c,r,hamming,action_similarity\n";
  double mean_similarity = 0.0, mean_hamming = 0.0;
  for (size_t i = 0; i < shared.size(); ++i) {
    const NicheCoord n = NicheCoord::from_index(shared[i]);
    const int h = hamming(a.archive.at(shared[i])->chromosome, b.archive.at(shared[i])->chromosome);
    csv << fmt(n.c_label()) << ',' << fmt(n.r_label()) << ',' << h << ',' << fmt(similarity[i]) << '\n';
    mean_similarity += similarity[i];
    mean_hamming += h;
  }
  if (!shared.empty()) {
    mean_similarity /= static_cast<double>(shared.size());
    mean_hamming /= static_cast<double>(shared.size());
  }
  manifest.write("similarity.csv", csv.str());
  if (o.write_corpus) manifest.write("corpus.jsonl", corpus_jsonl(corpus));
  manifest["corpus_states"] = corpus.records.size();
  manifest["mean_legal_actions"] = corpus.mean_legal_actions();
  manifest["shared_niches"] = shared.size();
  manifest["mean_action_similarity"] = mean_similarity;
  manifest["mean_hamming"] = mean_hamming;
  manifest.finish();
  return 0;
}

int cmd_cross_run(const CrossRunOptions& o) {
  const fs::path corpus_source = o.corpus_archive.empty() ? o.archive_a : o.corpus_archive;
  const ArchiveFile a = load_archive(o.archive_a);
  const ArchiveFile b = load_archive(o.archive_b);

  Manifest manifest("cross-run", o.out);
  manifest.input(o.archive_a);
  manifest.input(o.archive_b);
  manifest["corpus_archive"] = corpus_source.string();
  manifest["corpus_games"] = o.corpus_games;
  manifest["games_per_niche"] = o.games;
  manifest["seed"] = o.seed;

  WorkerPool workers(o.threads);
  const StateCorpus corpus = build_corpus(corpus_source, o.corpus_games, o.seed, workers);
  const CrossRunReport report =
      cross_run_report(a.archive, b.archive, o.games, corpus, derive_seed(o.seed, kAnalysisSeedTag), &workers);

  manifest.write("cross_run.csv", cross_run_csv(report));
  json only_a = json::array(), only_b = json::array();
  for (const NicheCoord& n : report.only_in_a) only_a.push_back(niche_json(n));
  for (const NicheCoord& n : report.only_in_b) only_b.push_back(niche_json(n));
  manifest["shared_niches"] = report.rows.size();
  manifest["only_in_a"] = only_a;
  manifest["only_in_b"] = only_b;
  manifest["corpus_states"] = corpus.records.size();
  manifest["mean_paired_score"] = report.mean_paired;
  manifest["mean_self_play"] = report.mean_self_play;
  manifest["mean_hamming"] = report.mean_hamming;
  manifest["mean_action_similarity"] = report.mean_similarity;
  manifest.finish();
  return 0;
}

int cmd_export(const ExportOptions& o) {
  const ArchiveFile file = load_archive(o.archive);
  Manifest manifest("export", o.out);
  manifest.input(o.archive);
  manifest.write("fitness_grid.csv", fitness_grid_csv(file.archive));
  manifest.write("elites.csv", elites_csv(file.archive));
  if (o.svg) manifest.write("fitness_grid.svg", fitness_grid_svg(file.archive));
  manifest["occupied"] = file.archive.size();
  manifest.finish();
  return 0;
}

int cmd_rules_list(const fs::path& out) {
  if (out.empty()) {
    std::cout << catalog_csv();
  } else {
    write_text_atomic(out, catalog_csv());
  }
  return 0;
}

}  // namespace hanabi_qd::cli
