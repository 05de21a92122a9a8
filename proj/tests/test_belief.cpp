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

#include <stdexcept>

#include "doctest.h"
#include "hanabi_qd/belief.hpp"
#include "support/belief_oracle.hpp"
#include "support/engine_scripts.hpp"

using namespace hanabi_qd;
using namespace hanabi_qd::testing;

namespace {

int id(const char* card) { return parse_card(card).identity(); }

SlotKnowledge known(const char* card) {
  const Card c = parse_card(card);
  return {static_cast<uint8_t>(1u << static_cast<int>(c.color)), static_cast<uint8_t>(1u << (c.rank - 1)), true};
}

// View of player 0 on the stacked deck before any move.
PlayerView opening_view() { return view_of(new_game_from_deck(stacked_deck()), 0); }

}  // namespace

TEST_CASE("fresh slot sees every identity minus the partner's cards") {
  const PlayerView v = opening_view();
  const CardDistribution d = possible_identities(v, 0);
  CHECK(d.support() == 25);
  CHECK(d.total == 45);
  CHECK(d.counts[id("R1")] == 2);  // partner holds one R1
  CHECK(d.counts[id("B1")] == 3);  // own cards are not deducted
  CHECK(d.counts[id("G5")] == 1);
  // Five distinct 1s in play order: 3+2+3+2+3 unseen 1s are playable.
  CHECK(playability_ratio(v, 0) == Ratio{13, 45});
  CHECK(uselessness_ratio(v, 0).is_zero());
}

TEST_CASE("fully known slot gives exact zero or one") {
  PlayerView v = opening_view();
  v.own_knowledge[0] = known("R1");
  CHECK(possible_identities(v, 0).support() == 1);
  CHECK(playability_probability(v, 0) == 1.0);
  CHECK(uselessness_indicator(v, 0) == 0.0);
  v.fireworks[1] = 1;
  CHECK(playability_probability(v, 0) == 0.0);
  CHECK(uselessness_indicator(v, 0) == 1.0);
}

TEST_CASE("rank 1 slot with every 1 played is unplayable") {
  PlayerView v = opening_view();
  v.own_knowledge[0].ranks = 0b1;
  v.fireworks = {1, 1, 1, 1, 1};
  for (int c = 0; c < 5; ++c) v.unseen[c * 5] -= 1;
  CHECK(playability_probability(v, 0) == 0.0);
  CHECK(uselessness_indicator(v, 0) == 1.0);
}

TEST_CASE("known R5 on a red firework at 4 is playable and not useless") {
  PlayerView v = opening_view();
  v.own_knowledge[0] = known("R5");
  v.fireworks[1] = 4;
  CHECK(playability_probability(v, 0) == 1.0);
  CHECK(uselessness_indicator(v, 0) == 0.0);
}

TEST_CASE("both R2 discarded makes R4 dead") {
  PlayerView v = opening_view();
  v.own_knowledge[0] = known("R4");
  v.fireworks[1] = 1;
  v.discard[id("R2")] = 2;
  CHECK(uselessness_indicator(v, 0) == 1.0);
  CHECK(((dead_mask(v.fireworks, v.discard, v.composition) >> id("R3")) & 1) == 1);
  CHECK(((dead_mask(v.fireworks, v.discard, v.composition) >> id("R2")) & 1) == 0);
  CHECK(((dead_mask(v.fireworks, v.discard, v.composition) >> id("R5")) & 1) == 1);
}

TEST_CASE("rank 5 hint with four other 5s visible leaves one color") {
  PlayerView v = opening_view();
  v.own_knowledge[0].ranks = 0b10000;
  // Partner shows B5 and R5, discard holds Y5 and W5.
  v.partner.cards[0] = parse_card("B5");
  v.partner.cards[1] = parse_card("R5");
  v.discard[id("Y5")] = 1;
  v.discard[id("W5")] = 1;
  v.unseen = v.composition;
  for (const Card& c : v.partner.occupied()) --v.unseen[c.identity()];
  for (int i = 0; i < kNumIdentities; ++i) v.unseen[i] -= v.discard[i];
  const CardDistribution d = possible_identities(v, 0);
  CHECK(d.support() == 1);
  CHECK(d.counts[id("G5")] == 1);
  CHECK(d.total == 1);
}

TEST_CASE("empty slot is an error") {
  const PlayerView v = opening_view();
  CHECK_THROWS_AS(possible_identities(v, 5), std::out_of_range);
  CHECK_THROWS_AS(playability_probability(v, 7), std::out_of_range);
}

TEST_CASE("summary agrees with the per-slot functions") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    GameState s = new_game(rng.next());
    for (int t = rng.below(40); t > 0 && !s.is_terminal(); --t) {
      auto legal = legal_actions(s);
      apply_action(s, legal[rng.below(static_cast<uint32_t>(legal.size()))]);
    }
    if (s.is_terminal()) continue;
    const PlayerView v = view_of(s, s.current_player);
    const BeliefSummary b = summarize(v);
    for (int slot = 0; slot < v.own_size; ++slot) {
      CHECK(b.playable[slot] == playability_ratio(v, slot));
      CHECK(b.useless[slot] == uselessness_ratio(v, slot));
      CHECK(playability_probability(v, slot) + uselessness_indicator(v, slot) <= 1.0);
    }
  }
}

TEST_CASE("hints never grow a slot's support") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    GameState s = new_game(rng.next());
    while (!s.is_terminal()) {
      const auto legal = legal_actions(s);
      const Action a = legal[rng.below(static_cast<uint32_t>(legal.size()))];
      if (!a.is_hint()) {
        apply_action(s, a);
        continue;
      }
      const PlayerView before = view_of(s, a.target);
      std::array<int, kHandSize> support{};
      for (int slot = 0; slot < before.own_size; ++slot) support[slot] = possible_identities(before, slot).support();
      apply_action(s, a);
      const PlayerView after = view_of(s, a.target);
      for (int slot = 0; slot < after.own_size; ++slot)
        CHECK(possible_identities(after, slot).support() <= support[slot]);
    }
  }
}

TEST_CASE("small-deck positions match exhaustive enumeration exactly") {
  Rng rng(11);
  int positions = 0;
  while (positions < 300) {
    const auto view = random_small_view(rng);
    if (!view) continue;
    ++positions;
    for (int slot = 0; slot < view->own_size; ++slot) {
      const auto [play, dead] = oracle_slot(*view, slot);
      const Ratio p = playability_ratio(*view, slot);
      const Ratio u = uselessness_ratio(*view, slot);
      REQUIRE(play.total > 0);
      CHECK(static_cast<long long>(p.num) * play.total == play.hits * p.den);
      CHECK(static_cast<long long>(u.num) * dead.total == dead.hits * u.den);
    }
  }
}
