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

// Single-core self-play throughput over random chromosomes.
// Usage: engine_throughput [games] [min_games_per_second]
// Exits nonzero if the measured rate is below the minimum.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "hanabi_qd/agent.hpp"
#include "hanabi_qd/rng.hpp"
#include "hanabi_qd/simulate.hpp"

using namespace hanabi_qd;

int main(int argc, char** argv) {
  const int games = argc > 1 ? std::atoi(argv[1]) : 100'000;
  const double minimum = argc > 2 ? std::atof(argv[2]) : 0.0;

  Rng rng(2024);
  std::vector<Chromosome> agents;
  for (int i = 0; i < 100; ++i) agents.push_back(random_chromosome(rng));

  long long total_score = 0, total_turns = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int g = 0; g < games; ++g) {
    const Chromosome& a = agents[g % agents.size()];
    const GameResult r = play_game(a, a, derive_seed(7, g));
    total_score += r.score;
    total_turns += r.turns;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double rate = games / secs;
  std::printf("games=%d seconds=%.3f games_per_second=%.0f mean_score=%.3f mean_turns=%.1f\n", games, secs, rate,
              static_cast<double>(total_score) / games, static_cast<double>(total_turns) / games);
  if (rate < minimum) {
    std::printf("FAIL: below %.0f games/s\n", minimum);
    return 1;
  }
  return 0;
}
