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

#include <set>
#include <sstream>

#include "doctest.h"
#include "hanabi_qd/rules.hpp"
#include "support/engine_scripts.hpp"

using namespace hanabi_qd;
using namespace hanabi_qd::testing;

namespace {

std::optional<Action> fire(RuleTemplate t, const PlayerView& v, RuleGuard g = RuleGuard::kAlways) {
  return apply_rule(make_rule(t, g), v);
}

PlayerView opening_view(int player = 0) { return view_of(new_game_from_deck(stacked_deck()), player); }

SlotKnowledge known(const char* card) {
  const Card c = parse_card(card);
  return {static_cast<uint8_t>(1u << static_cast<int>(c.color)), static_cast<uint8_t>(1u << (c.rank - 1)), true};
}

}  // namespace

TEST_CASE("catalog has 135 rules with template-major ids") {
  const RuleCatalog& rules = catalog();
  CHECK(rules.size() == 135);
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < kNumRules; ++i) {
    CHECK(rules[i].id == i);
    CHECK(static_cast<int>(rules[i].tmpl) == i / 9);
    CHECK(static_cast<int>(rules[i].guard) == i % 9);
    seen.insert({static_cast<int>(rules[i].tmpl), static_cast<int>(rules[i].guard)});
  }
  CHECK(seen.size() == 135);
  CHECK(rule_id(RuleTemplate::kDiscardRandom, RuleGuard::kDeckAtLeast10) == 134);
}

TEST_CASE("catalog csv and hash are stable") {
  const std::string csv = catalog_csv();
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "id,template,threshold,guard");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 135);
  CHECK(csv.find("0,PlaySafeCard,1.0,always\n") == 0 + std::string("id,template,threshold,guard\n").size());
  CHECK(csv.find("\n21,PlayProbablySafe,0.4,tokens<6\n") != std::string::npos);
  CHECK(catalog_hash().size() == 16);
  CHECK(catalog_hash() == catalog_hash());
}

TEST_CASE("guards") {
  PlayerView v = opening_view();
  v.info_tokens = 3;
  v.lives = 1;
  v.deck_size = 9;
  CHECK(guard_holds(RuleGuard::kAlways, v));
  CHECK_FALSE(guard_holds(RuleGuard::kTokensBelow2, v));
  CHECK(guard_holds(RuleGuard::kTokensBelow4, v));
  CHECK(guard_holds(RuleGuard::kTokensBelow6, v));
  CHECK_FALSE(guard_holds(RuleGuard::kTokensAtLeast4, v));
  CHECK(guard_holds(RuleGuard::kLivesOne, v));
  CHECK_FALSE(guard_holds(RuleGuard::kLivesAtLeast2, v));
  CHECK(guard_holds(RuleGuard::kDeckBelow10, v));
  CHECK_FALSE(guard_holds(RuleGuard::kDeckAtLeast10, v));
  v.deck_size = 10;
  CHECK(guard_holds(RuleGuard::kDeckAtLeast10, v));
  CHECK_FALSE(fire(RuleTemplate::kTellMostInformative, v, RuleGuard::kTokensAtLeast4));
}

TEST_CASE("play rules") {
  PlayerView v = opening_view();
  CHECK_FALSE(fire(RuleTemplate::kPlaySafeCard, v));
  CHECK(fire(RuleTemplate::kPlayProbablySafe00, v) == Action::play(0));  // ties go to slot 0
  CHECK_FALSE(fire(RuleTemplate::kPlayProbablySafe40, v));              // 13/45 < 0.4
  v.own_knowledge[3] = known("R1");
  CHECK(fire(RuleTemplate::kPlaySafeCard, v) == Action::play(3));
  CHECK(fire(RuleTemplate::kPlayProbablySafe60, v) == Action::play(3));
  v.own_knowledge[3] = SlotKnowledge{};
  v.own_knowledge[2].ranks = 0b11;  // a 1 or a 2: 13 of 20 unseen copies are playable
  CHECK(fire(RuleTemplate::kPlayProbablySafe60, v) == Action::play(2));
  CHECK_FALSE(fire(RuleTemplate::kPlaySafeCard, v));
}

TEST_CASE("tell playable names the rank first, then the color") {
  PlayerView v = opening_view();  // partner: R1 W1 B2 Y2 G2
  CHECK(fire(RuleTemplate::kTellPartnerAboutPlayableCard, v) == Action::hint_rank(1, 1));
  v.partner.knowledge[0].ranks = 0b1;
  CHECK(fire(RuleTemplate::kTellPartnerAboutPlayableCard, v) == Action::hint_color(1, Color::kRed));
  v.partner.knowledge[0] = known("R1");
  CHECK(fire(RuleTemplate::kTellPartnerAboutPlayableCard, v) == Action::hint_rank(1, 1));  // W1 next
  v.partner.knowledge[1] = known("W1");
  CHECK_FALSE(fire(RuleTemplate::kTellPartnerAboutPlayableCard, v));
  v.info_tokens = 0;
  v.partner.knowledge[1] = SlotKnowledge{};
  CHECK_FALSE(fire(RuleTemplate::kTellPartnerAboutPlayableCard, v));
}

TEST_CASE("tell useless targets dead cards only") {
  PlayerView v = opening_view();
  CHECK_FALSE(fire(RuleTemplate::kTellPartnerAboutUselessCard, v));
  v.fireworks[3] = 1;  // W1 already played
  CHECK(fire(RuleTemplate::kTellPartnerAboutUselessCard, v) == Action::hint_rank(1, 1));
}

TEST_CASE("tell most informative maximizes removed possibilities") {
  PlayerView v = opening_view();  // R1 W1 B2 Y2 G2
  // Rank 2 touches three cards: 3*4 removed + 2*1 = 14. Any color: 4 + 4*1 = 8.
  CHECK(fire(RuleTemplate::kTellMostInformative, v) == Action::hint_rank(1, 2));
}

TEST_CASE("tell unknown rank and color use the oldest unknown slot") {
  PlayerView v = opening_view();
  CHECK(fire(RuleTemplate::kTellUnknownRank, v) == Action::hint_rank(1, 1));
  CHECK(fire(RuleTemplate::kTellUnknownColor, v) == Action::hint_color(1, Color::kRed));
  v.partner.knowledge[0] = known("R1");
  CHECK(fire(RuleTemplate::kTellUnknownColor, v) == Action::hint_color(1, Color::kWhite));
}

TEST_CASE("discard rules respect the token cap") {
  PlayerView v = opening_view();
  for (RuleTemplate t : {RuleTemplate::kDiscardCertainlyUseless, RuleTemplate::kDiscardProbablyUseless60,
                         RuleTemplate::kDiscardProbablyUseless80, RuleTemplate::kDiscardOldestUnhinted,
                         RuleTemplate::kDiscardOldest, RuleTemplate::kDiscardRandom})
    CHECK_FALSE(fire(t, v));
  v.info_tokens = 5;
  CHECK(fire(RuleTemplate::kDiscardOldest, v) == Action::discard(0));
  v.own_knowledge[0].hinted = true;
  CHECK(fire(RuleTemplate::kDiscardOldestUnhinted, v) == Action::discard(1));
  CHECK_FALSE(fire(RuleTemplate::kDiscardCertainlyUseless, v));
  v.fireworks = {1, 1, 1, 1, 1};
  v.own_knowledge[4].ranks = 0b1;
  CHECK(fire(RuleTemplate::kDiscardCertainlyUseless, v) == Action::discard(4));
  const auto r = fire(RuleTemplate::kDiscardRandom, v);
  REQUIRE(r);
  CHECK(r == fire(RuleTemplate::kDiscardRandom, v));  // same view, same slot
  CHECK(r->slot() < v.own_size);
}

TEST_CASE("proposed actions are always legal") {
  Rng rng(17);
  for (int g = 0; g < 150; ++g) {
    GameState s = new_game(rng.next());
    while (!s.is_terminal()) {
      const PlayerView v = view_of(s, s.current_player);
      RuleContext ctx(v);
      for (const Rule& rule : catalog())
        if (auto a = apply_rule(rule, ctx)) REQUIRE(is_legal(s, *a));
      const auto legal = legal_actions(s);
      apply_action(s, legal[rng.below(static_cast<uint32_t>(legal.size()))]);
    }
  }
}

TEST_CASE("view hash ignores nothing observable") {
  PlayerView v = opening_view();
  const uint64_t h = canonical_view_hash(v);
  PlayerView w = v;
  w.turn = 1;
  CHECK(canonical_view_hash(w) != h);
  w = v;
  w.own_knowledge[4].ranks = 0b10;
  CHECK(canonical_view_hash(w) != h);
  CHECK(canonical_view_hash(opening_view()) == h);
}
