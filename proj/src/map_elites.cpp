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

#include "hanabi_qd/map_elites.hpp"

#include <cmath>

#include "hanabi_qd/simulate.hpp"

namespace hanabi_qd {
namespace {

constexpr uint64_t kFrozenSeedTag = 0x5EED5E7;

bool same_elite(const Elite& a, const Elite& b) {
  return a.chromosome == b.chromosome && a.fitness == b.fitness && a.games_played == b.games_played &&
         a.fitness_sd == b.fitness_sd && a.descriptor == b.descriptor && a.individual == b.individual &&
         a.lineage_seed == b.lineage_seed;
}

EvalResult summarize_games(const std::vector<GameResult>& games) {
  EvalResult out;
  out.games = static_cast<int>(games.size());
  int64_t total = 0;
  for (const GameResult& g : games) {
    total += g.score;
    for (const BehaviorStats& s : g.stats) out.stats.merge(s);
  }
  out.fitness = static_cast<double>(total) / out.games;
  if (out.games > 1) {
    double ss = 0.0;
    for (const GameResult& g : games) ss += (g.score - out.fitness) * (g.score - out.fitness);
    out.score_sd = std::sqrt(ss / (out.games - 1));
  }
  out.descriptor = finalize(out.stats);
  return out;
}

struct Candidate {
  Chromosome chromosome;
  uint64_t individual = 0;
  uint64_t stream = 0;
  EvalResult eval;
  std::optional<Elite> snapshot_incumbent;
  std::optional<EvalResult> incumbent_reeval;
};

}  // namespace

double EvalResult::sem() const { return games > 0 ? score_sd / std::sqrt(static_cast<double>(games)) : 0.0; }

EvalResult evaluate(const Chromosome& chromosome, int n_games, uint64_t eval_seed, WorkerPool* pool) {
  if (n_games < 1) throw std::invalid_argument("evaluate needs at least one game");
  std::vector<GameResult> games(n_games);
  auto body = [&](size_t g) { games[g] = play_game(chromosome, chromosome, derive_seed(eval_seed, g)); };
  if (pool) {
    pool->parallel_for(games.size(), body);
  } else {
    for (size_t g = 0; g < games.size(); ++g) body(g);
  }
  return summarize_games(games);
}

int Archive::size() const {
  int n = 0;
  for (const auto& cell : cells_) n += cell.has_value();
  return n;
}

std::vector<int> Archive::occupied() const {
  std::vector<int> out;
  for (int i = 0; i < kNumNiches; ++i)
    if (cells_[i]) out.push_back(i);
  return out;
}

std::vector<Elite> Archive::elites() const {
  std::vector<Elite> out;
  for (const auto& cell : cells_)
    if (cell) out.push_back(*cell);
  return out;
}

std::vector<Elite> Archive::valid_elites() const {
  std::vector<Elite> out;
  for (const auto& cell : cells_)
    if (cell && cell->fitness > 0.0) out.push_back(*cell);
  return out;
}

bool Archive::operator==(const Archive& other) const {
  for (int i = 0; i < kNumNiches; ++i) {
    if (cells_[i].has_value() != other.cells_[i].has_value()) return false;
    if (cells_[i] && !same_elite(*cells_[i], *other.cells_[i])) return false;
  }
  return true;
}

void QdConfig::validate() const {
  if (total_individuals < 1) throw ConfigError("total_individuals must be at least 1");
  if (random_init_count > total_individuals)
    throw ConfigError("random_init_count must not exceed total_individuals");
  if (games_per_eval < 1) throw ConfigError("games_per_eval must be at least 1");
  if (batch_size < 1) throw ConfigError("batch_size must be at least 1");
  if (checkpoint_every < 1) throw ConfigError("checkpoint_every must be at least 1");
}

InsertOutcome try_insert_with(Archive& archive, const Elite& candidate, const EvalResult& incumbent_reeval) {
  const NicheCoord niche = candidate.niche();
  InsertOutcome out;
  const auto& slot = archive.at(niche);
  if (!slot) {
    archive.put(candidate);
    out.inserted = true;
    return out;
  }
  Elite incumbent = *slot;
  incumbent.fitness = incumbent_reeval.fitness;
  incumbent.games_played = incumbent_reeval.games;
  incumbent.fitness_sd = incumbent_reeval.score_sd;
  out.contested = true;
  out.incumbent_fitness = incumbent.fitness;
  if (candidate.fitness > incumbent.fitness) {
    archive.put(candidate);
    out.inserted = true;
  } else {
    archive.put_at(niche, incumbent);
  }
  return out;
}

InsertOutcome try_insert(Archive& archive, const Elite& candidate, int n_games, uint64_t reeval_seed,
                         WorkerPool* pool) {
  const auto& slot = archive.at(candidate.niche());
  if (!slot) return try_insert_with(archive, candidate, EvalResult{});
  return try_insert_with(archive, candidate, evaluate(slot->chromosome, n_games, reeval_seed, pool));
}

Archive run_map_elites(const QdConfig& config, WorkerPool* pool, RunStats* stats_out, const CheckpointFn& checkpoint) {
  config.validate();
  Archive archive;
  RunStats stats;
  const uint64_t frozen_seed = derive_seed(config.master_seed, kFrozenSeedTag);
  auto eval_seed = [&](uint64_t stream) { return config.frozen_seeds ? frozen_seed : derive_seed(stream, 1); };
  auto reeval_seed = [&](uint64_t stream) { return config.frozen_seeds ? frozen_seed : derive_seed(stream, 2); };
  const int games = config.games_per_eval;

  uint64_t next = 0;
  uint64_t last_checkpoint = 0;
  std::vector<Candidate> batch;
  while (next < config.total_individuals) {
    const bool init_phase = next < config.random_init_count;
    const uint64_t phase_end = init_phase ? config.random_init_count : config.total_individuals;
    const uint64_t end = std::min<uint64_t>(phase_end, next + static_cast<uint64_t>(config.batch_size));

    // Generate against the archive as it stands at the start of the batch.
    batch.assign(end - next, Candidate{});
    const std::vector<int> occupied = archive.occupied();
    for (uint64_t k = next; k < end; ++k) {
      Candidate& cand = batch[k - next];
      cand.individual = k;
      cand.stream = derive_seed(config.master_seed, k);
      Rng rng(derive_seed(cand.stream, 0));
      if (init_phase || occupied.empty()) {
        cand.chromosome = random_chromosome(rng);
      } else {
        const size_t pick = rng.below(static_cast<uint32_t>(occupied.size()));
        size_t mate = pick;
        if (occupied.size() > 1) {
          mate = rng.below(static_cast<uint32_t>(occupied.size() - 1));
          if (mate >= pick) ++mate;
        }
        cand.chromosome =
            make_offspring(archive.at(occupied[pick])->chromosome, archive.at(occupied[mate])->chromosome, rng);
      }
    }

    const bool per_candidate = batch.size() > 1 && pool;
    auto eval_body = [&](size_t i) {
      batch[i].eval = evaluate(batch[i].chromosome, games, eval_seed(batch[i].stream), per_candidate ? nullptr : pool);
    };
    if (per_candidate) {
      pool->parallel_for(batch.size(), eval_body);
    } else {
      for (size_t i = 0; i < batch.size(); ++i) eval_body(i);
    }

    for (Candidate& cand : batch)
      if (cand.eval.descriptor) cand.snapshot_incumbent = archive.at(niche_of(*cand.eval.descriptor));
    auto reeval_body = [&](size_t i) {
      Candidate& cand = batch[i];
      if (cand.snapshot_incumbent)
        cand.incumbent_reeval = evaluate(cand.snapshot_incumbent->chromosome, games, reeval_seed(cand.stream),
                                         per_candidate ? nullptr : pool);
    };
    if (per_candidate) {
      pool->parallel_for(batch.size(), reeval_body);
    } else {
      for (size_t i = 0; i < batch.size(); ++i) reeval_body(i);
    }

    for (Candidate& cand : batch) {
      ++stats.individuals;
      ++stats.evaluations;
      stats.games += static_cast<uint64_t>(games);
      if (!cand.eval.descriptor) {
        ++stats.unnichable;
        continue;
      }
      Elite elite{cand.chromosome, cand.eval.fitness, cand.eval.games, cand.eval.score_sd, *cand.eval.descriptor,
                  cand.individual, cand.stream};
      const auto& current = archive.at(elite.niche());
      InsertOutcome outcome;
      if (!current) {
        outcome = try_insert_with(archive, elite, EvalResult{});
      } else {
        ++stats.evaluations;
        stats.games += static_cast<uint64_t>(games);
        // The precomputed re-evaluation is only valid if the snapshot
        // incumbent still holds the niche.
        if (cand.snapshot_incumbent && cand.snapshot_incumbent->individual == current->individual) {
          outcome = try_insert_with(archive, elite, *cand.incumbent_reeval);
        } else {
          outcome = try_insert(archive, elite, games, reeval_seed(cand.stream), pool);
        }
      }
      if (!outcome.contested) ++stats.inserts_into_empty;
      if (outcome.contested) ++stats.contests;
      if (outcome.contested && outcome.inserted) ++stats.replacements;
    }
    next = end;

    if (checkpoint && next / config.checkpoint_every != last_checkpoint / config.checkpoint_every) {
      checkpoint(archive, stats);
      last_checkpoint = next;
    }
  }
  if (stats_out) *stats_out = stats;
  return archive;
}

Archive reevaluate_archive(const Archive& archive, int n_games, uint64_t seed, WorkerPool* pool,
                           std::vector<ReevalEntry>* report) {
  if (n_games < 1) throw std::invalid_argument("reevaluation needs at least one game");
  const std::vector<int> niches = archive.occupied();
  std::vector<EvalResult> results(niches.size());
  auto body = [&](size_t i) {
    results[i] = evaluate(archive.at(niches[i])->chromosome, n_games, derive_seed(seed, niches[i]));
  };
  if (pool) {
    pool->parallel_for(niches.size(), body);
  } else {
    for (size_t i = 0; i < niches.size(); ++i) body(i);
  }
  Archive out = archive;
  if (report) report->clear();
  for (size_t i = 0; i < niches.size(); ++i) {
    const NicheCoord niche = NicheCoord::from_index(niches[i]);
    Elite elite = *archive.at(niches[i]);
    elite.fitness = results[i].fitness;
    elite.games_played = results[i].games;
    elite.fitness_sd = results[i].score_sd;
    out.put_at(niche, elite);
    if (report) report->push_back({niche, results[i].fitness, results[i].score_sd, results[i].sem(), results[i].games});
  }
  return out;
}

}  // namespace hanabi_qd
