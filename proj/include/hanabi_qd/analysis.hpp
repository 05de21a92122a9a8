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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hanabi_qd/map_elites.hpp"
#include "json.hpp"

// Post-hoc analyses over one or more archives: pairwise cross-play, best
// partners, distance profiles and representation/behavior diversity.
namespace hanabi_qd {

// Symmetric matrix over a pool ordered by niche index. Off-diagonal cells
// pool both orderings and both seatings; the diagonal is self-play.
struct CrossplayMatrix {
  std::vector<NicheCoord> niches;
  std::vector<double> means;  // row-major n x n
  std::vector<int> games;     // row-major n x n
  uint64_t total_games = 0;

  size_t size() const { return niches.size(); }
  double at(size_t i, size_t j) const { return means[i * size() + j]; }
  int games_at(size_t i, size_t j) const { return games[i * size() + j]; }
  // Mean of each row, i.e. an agent's average over the whole pool including itself.
  std::vector<double> agent_means() const;
  double diagonal_mean() const;
  double off_diagonal_mean() const;
};

// Games crossplay() will simulate: pool_size^2 * games_per_pair.
uint64_t planned_crossplay_games(uint64_t pool_size, int games_per_pair);

CrossplayMatrix crossplay(std::span<const Elite> pool, int games_per_pair, uint64_t seed,
                          WorkerPool* workers = nullptr);

struct BestPartners {
  std::vector<size_t> partner;      // partner[i] = index of i's best partner
  std::vector<int> times_chosen;    // how many agents named each agent
};

// Ties go to the lower niche index.
BestPartners best_partners(const CrossplayMatrix& matrix);

struct DistanceBucket {
  int distance = 0;
  double mean = 0.0;
  int pairs = 0;
};

// Unordered pairs (including self-pairs) bucketed by grid Manhattan distance.
std::vector<DistanceBucket> manhattan_profile(const CrossplayMatrix& matrix);

struct Correlation {
  double rho = 0.0;
  double p_value = 1.0;  // two-sided, t approximation
  int n = 0;
};

Correlation spearman(std::span<const double> x, std::span<const double> y);

int hamming(const Chromosome& a, const Chromosome& b);

struct CorpusRecord {
  PlayerView view;
  NicheCoord niche;
  uint32_t game = 0;
  uint32_t turn = 0;
};

struct StateCorpus {
  std::vector<CorpusRecord> records;

  double mean_legal_actions() const;
};

int legal_action_count(const PlayerView& view);

// Every pre-action view from both seats of `games_each` self-play games per elite.
StateCorpus collect_corpus(std::span<const Elite> pool, int games_each, uint64_t seed,
                           WorkerPool* workers = nullptr);

// Fraction of corpus views on which both agents pick the identical action.
double action_similarity(const Chromosome& a, const Chromosome& b, const StateCorpus& corpus);

// Mean score of `a` paired with `b`, half the games with each agent seated first.
double paired_score(const Chromosome& a, const Chromosome& b, int games, uint64_t seed);

struct CrossRunRow {
  NicheCoord niche;
  double paired_score = 0.0;
  double self_play_a = 0.0;
  double self_play_b = 0.0;
  int hamming = 0;
  double similarity = 0.0;
};

struct CrossRunReport {
  std::vector<CrossRunRow> rows;       // niches occupied in both runs
  std::vector<NicheCoord> only_in_a;
  std::vector<NicheCoord> only_in_b;
  double mean_paired = 0.0;
  double mean_self_play = 0.0;  // over both runs' elites in the shared niches
  double mean_hamming = 0.0;
  double mean_similarity = 0.0;
};

CrossRunReport cross_run_report(const Archive& a, const Archive& b, int games, const StateCorpus& corpus,
                                uint64_t seed, WorkerPool* workers = nullptr);

// CSV exports. Grids are 20 rows (communicativeness bin) by 20 columns (risk
// aversion bin); empty niches are written as NA, never as 0.
std::string fitness_grid_csv(const Archive& archive);
std::string agent_mean_grid_csv(const CrossplayMatrix& matrix);
std::string best_partner_grid_csv(const CrossplayMatrix& matrix, const BestPartners& partners);
std::string best_partner_list_csv(const CrossplayMatrix& matrix, const BestPartners& partners);
std::string crossplay_matrix_csv(const CrossplayMatrix& matrix);
std::string distance_profile_csv(std::span<const DistanceBucket> profile);
std::string cross_run_csv(const CrossRunReport& report);
std::string reevaluation_csv(std::span<const ReevalEntry> report);
// Optional plain SVG heatmap of the fitness grid.
std::string fitness_grid_svg(const Archive& archive);

nlohmann::json view_to_json(const PlayerView& view);
// One JSON object per line.
std::string corpus_jsonl(const StateCorpus& corpus);

}  // namespace hanabi_qd
