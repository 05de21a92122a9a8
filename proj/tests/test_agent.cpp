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

#include <cmath>

#include "doctest.h"
#include "hanabi_qd/agent.hpp"
#include "hanabi_qd/simulate.hpp"
#include "support/engine_scripts.hpp"

using namespace hanabi_qd;
using namespace hanabi_qd::testing;

namespace {

Chromosome all_of(int gene) {
  Chromosome c;
  c.genes.fill(static_cast<uint8_t>(gene));
  return c;
}

}  // namespace

TEST_CASE("chromosome text round trip and validation") {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Chromosome c = random_chromosome(rng);
    CHECK(parse_chromosome(to_string(c)) == c);
  }
  CHECK(to_string(all_of(7)) == "7,7,7,7,7,7,7,7,7,7,7,7,7,7,7");
  CHECK_THROWS(parse_chromosome("1,2,3"));
  CHECK_THROWS(parse_chromosome("0,0,0,0,0,0,0,0,0,0,0,0,0,0,135"));
  CHECK_THROWS(parse_chromosome("0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0"));
  CHECK_THROWS(parse_chromosome("0,0,0,0,0,0,0,0,0,0,0,0,0,0,x"));
  CHECK_THROWS(parse_chromosome("0,0,0,0,0,0,0,0,0,0,0,0,0,0,-1"));
}

TEST_CASE("first firing rule wins") {
  const PlayerView v = view_of(new_game_from_deck(stacked_deck()), 0);
  Chromosome c = all_of(rule_id(RuleTemplate::kPlaySafeCard, RuleGuard::kAlways));
  c.genes[3] = rule_id(RuleTemplate::kTellUnknownColor, RuleGuard::kAlways);
  c.genes[5] = rule_id(RuleTemplate::kTellUnknownRank, RuleGuard::kAlways);
  RuleContext ctx(v);
  CHECK(firing_gene(c, ctx) == 3);
  CHECK(decide(c, v) == Action::hint_color(1, Color::kRed));
}

TEST_CASE("fallback discards oldest, or hints the partner's oldest rank at eight tokens") {
  PlayerView v = view_of(new_game_from_deck(stacked_deck()), 0);
  const Chromosome never = all_of(rule_id(RuleTemplate::kPlaySafeCard, RuleGuard::kAlways));
  CHECK(decide(never, v) == Action::hint_rank(1, 1));
  RuleContext ctx(v);
  CHECK(firing_gene(never, ctx) == -1);
  v.info_tokens = 4;
  CHECK(decide(never, v) == Action::discard(0));
}

TEST_CASE("mutation changes 15 * 0.1 * 134/135 genes on average") {
  Rng rng(2024);
  const Chromosome parent = random_chromosome(rng);
  const int trials = 100'000;
  double sum = 0, sum_sq = 0;
  for (int t = 0; t < trials; ++t) {
    const Chromosome child = mutate(parent, rng);
    int changed = 0;
    for (int i = 0; i < kChromosomeLength; ++i) changed += child.genes[i] != parent.genes[i];
    sum += changed;
    sum_sq += changed * changed;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sum_sq / trials - mean * mean) / trials);
  CHECK(std::abs(mean - 15 * 0.1 * 134.0 / 135.0) < 3 * se);
}

TEST_CASE("crossover takes each gene from the first parent half the time") {
  Rng rng(7);
  const Chromosome a = all_of(1), b = all_of(2);
  const int trials = 100'000;
  long long from_a = 0;
  for (int t = 0; t < trials; ++t) {
    const Chromosome child = crossover(a, b, rng);
    for (uint8_t g : child.genes) from_a += g == 1;
  }
  const double n = trials * 15.0;
  const double p = from_a / n;
  CHECK(std::abs(p - 0.5) < 3 * std::sqrt(0.25 / n));
}

TEST_CASE("offspring without mutation or crossover is a copy") {
  Rng rng(9);
  const Chromosome a = random_chromosome(rng), b = random_chromosome(rng);
  CHECK(make_offspring(a, b, rng, {0.0, 0.0, 0.5}) == a);
  const Chromosome child = make_offspring(a, b, rng, {0.0, 1.0, 0.5});
  for (int i = 0; i < kChromosomeLength; ++i) CHECK((child.genes[i] == a.genes[i] || child.genes[i] == b.genes[i]));
}

TEST_CASE("self-play games are reproducible and replayable") {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Chromosome a = random_chromosome(rng), b = random_chromosome(rng);
    const uint64_t seed = rng.next();
    TraceRecorder rec(seed);
    const GameResult r1 = play_game(a, b, seed, &rec);
    const GameResult r2 = play_game(a, b, seed);
    CHECK(r1.score == r2.score);
    CHECK(r1.turns == r2.turns);
    const GameState end = replay(rec.trace());
    CHECK(end.score() == r1.score);
    CHECK(end.is_terminal());
    const GameTrace back = trace_from_json(to_json(rec.trace()));
    CHECK(back == rec.trace());
  }
}

TEST_CASE("replay rejects a tampered trace") {
  const Chromosome a = all_of(rule_id(RuleTemplate::kTellMostInformative, RuleGuard::kAlways));
  TraceRecorder rec(5);
  play_game(a, a, 5, &rec);
  GameTrace t = rec.trace();
  t.snapshots[0].info_tokens += 1;
  CHECK_THROWS_AS(replay(t), GameError);
  GameTrace u = rec.trace();
  u.actions.push_back(Action::play(0));
  CHECK_THROWS_AS(replay(u), GameError);
}
