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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hanabi_qd/agent.hpp"
#include "hanabi_qd/descriptors.hpp"
#include "hanabi_qd/parallel.hpp"

namespace hanabi_qd {

struct EvalResult {
  double fitness = 0.0;  // mean score
  double score_sd = 0.0;
  int games = 0;
  BehaviorStats stats;  // pooled over both seats and all games
  std::optional<BehaviorDescriptor> descriptor;

  double sem() const;
};

// Self-play evaluation: both seats run `chromosome`. Game g uses seed
// derive_seed(eval_seed, g). Results do not depend on the pool size.
EvalResult evaluate(const Chromosome& chromosome, int n_games, uint64_t eval_seed, WorkerPool* pool = nullptr);

struct Elite {
  Chromosome chromosome;
  double fitness = 0.0;
  int games_played = 0;
  double fitness_sd = 0.0;
  BehaviorDescriptor descriptor;
  uint64_t individual = 0;    // creation index within the run
  uint64_t lineage_seed = 0;  // stream seed the individual was derived from

  NicheCoord niche() const { return niche_of(descriptor); }
};

class Archive {
 public:
  const std::optional<Elite>& at(const NicheCoord& niche) const { return cells_[niche.index()]; }
  const std::optional<Elite>& at(int index) const { return cells_[index]; }
  // Stores `elite` under its own niche, replacing any incumbent.
  void put(const Elite& elite) { cells_[elite.niche().index()] = elite; }
  void put_at(const NicheCoord& niche, const Elite& elite) { cells_[niche.index()] = elite; }
  void erase(const NicheCoord& niche) { cells_[niche.index()].reset(); }

  int size() const;
  // Occupied niche indices in ascending order.
  std::vector<int> occupied() const;
  // Elites with fitness > 0, ordered by niche index.
  std::vector<Elite> valid_elites() const;
  std::vector<Elite> elites() const;
  bool operator==(const Archive&) const;

 private:
  std::array<std::optional<Elite>, kNumNiches> cells_;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct QdConfig {
  uint64_t total_individuals = 1'000'000;
  uint64_t random_init_count = 10'000;
  int games_per_eval = 100;
  uint64_t master_seed = 0;
  // Offspring generated against one archive snapshot before inserting.
  // 1 is the serial reference schedule.
  int batch_size = 1;
  uint64_t checkpoint_every = 10'000;
  // Every evaluation reuses one seed set, removing evaluation noise.
  bool frozen_seeds = false;

  void validate() const;
};

struct InsertOutcome {
  bool inserted = false;       // candidate now holds the niche
  bool contested = false;      // an incumbent was re-evaluated
  double incumbent_fitness = 0.0;
};

// Empty niche: candidate goes in. Otherwise the incumbent is re-evaluated
// with `reeval_seed` and the higher fitness keeps the niche; the incumbent
// wins ties and keeps its new measurement either way.
InsertOutcome try_insert(Archive& archive, const Elite& candidate, int n_games, uint64_t reeval_seed,
                         WorkerPool* pool = nullptr);
// Same, with the incumbent's re-evaluation already computed.
InsertOutcome try_insert_with(Archive& archive, const Elite& candidate, const EvalResult& incumbent_reeval);

struct RunStats {
  uint64_t individuals = 0;
  uint64_t evaluations = 0;  // candidate evaluations plus incumbent re-evaluations
  uint64_t unnichable = 0;
  uint64_t inserts_into_empty = 0;
  uint64_t contests = 0;
  uint64_t replacements = 0;
  uint64_t games = 0;
};

using CheckpointFn = std::function<void(const Archive&, const RunStats&)>;

Archive run_map_elites(const QdConfig& config, WorkerPool* pool = nullptr, RunStats* stats = nullptr,
                       const CheckpointFn& checkpoint = {});

struct ReevalEntry {
  NicheCoord niche;
  double fitness = 0.0;
  double sd = 0.0;
  double sem = 0.0;
  int games = 0;
};

// Fresh n_games evaluation of every elite (seed derived from `seed` and the
// niche index). Chromosomes, descriptors and niche keys are kept.
Archive reevaluate_archive(const Archive& archive, int n_games, uint64_t seed, WorkerPool* pool = nullptr,
                           std::vector<ReevalEntry>* report = nullptr);

}  // namespace hanabi_qd
