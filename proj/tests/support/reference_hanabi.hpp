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

// A deliberately naive two-player Hanabi model written straight from the
// rules, sharing no code with the engine. Tests drive both with the same
// deck and actions and compare every observable.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hanabi_qd/game.hpp"

namespace hanabi_qd::testing {

struct RefCard {
  int color = 0;
  int rank = 1;
  std::set<int> colors{0, 1, 2, 3, 4};
  std::set<int> ranks{1, 2, 3, 4, 5};
  bool hinted = false;
};

struct RefGame {
  std::vector<std::pair<int, int>> deck;  // (color, rank), front is drawn first
  std::vector<RefCard> hands[2];
  int fireworks[5] = {0, 0, 0, 0, 0};
  std::map<std::pair<int, int>, int> discards;
  int tokens = 8;
  int lives = 3;
  int player = 0;
  int countdown = -1;
  bool over = false;
  int turns = 0;

  RefGame(const std::vector<Card>& cards, int hand_size = 5) {
    for (const Card& c : cards) deck.emplace_back(static_cast<int>(c.color), c.rank);
    for (int p = 0; p < 2; ++p)
      for (int i = 0; i < hand_size; ++i) draw(p);
    if (deck.empty()) countdown = 2;
  }

  void draw(int p) {
    RefCard card;
    card.color = deck.front().first;
    card.rank = deck.front().second;
    deck.erase(deck.begin());
    hands[p].push_back(card);
  }

  int score() const {
    int s = 0;
    for (int f : fireworks) s += f;
    return s;
  }

  // Returns an empty string when the action is legal, else a reason.
  std::string why_illegal(const Action& a) const {
    if (over) return "over";
    const int n = static_cast<int>(hands[player].size());
    switch (a.type) {
      case ActionType::kPlay:
        return a.value < n ? "" : "slot";
      case ActionType::kDiscard:
        if (tokens == 8) return "tokens full";
        return a.value < n ? "" : "slot";
      case ActionType::kHintColor:
      case ActionType::kHintRank: {
        if (tokens == 0) return "no tokens";
        if (a.target != 1 - player) return "target";
        for (const RefCard& c : hands[1 - player]) {
          if (a.type == ActionType::kHintColor && c.color == a.value) return "";
          if (a.type == ActionType::kHintRank && c.rank == a.value) return "";
        }
        return "empty hint";
      }
    }
    return "type";
  }

  std::vector<Action> legal() const {
    std::vector<Action> out;
    std::vector<Action> all;
    for (int s = 0; s < 5; ++s) {
      all.push_back(Action::play(s));
      all.push_back(Action::discard(s));
    }
    for (int c = 0; c < 5; ++c) all.push_back(Action::hint_color(1 - player, static_cast<Color>(c)));
    for (int r = 1; r <= 5; ++r) all.push_back(Action::hint_rank(1 - player, r));
    for (const Action& a : all)
      if (why_illegal(a).empty()) out.push_back(a);
    return out;
  }

  void apply(const Action& a) {
    std::vector<RefCard>& hand = hands[player];
    bool drew_needed = false;
    if (a.type == ActionType::kPlay || a.type == ActionType::kDiscard) {
      RefCard card = hand[a.value];
      hand.erase(hand.begin() + a.value);
      if (a.type == ActionType::kPlay && fireworks[card.color] + 1 == card.rank) {
        fireworks[card.color] = card.rank;
        if (card.rank == 5 && tokens < 8) ++tokens;
      } else {
        ++discards[{card.color, card.rank}];
        if (a.type == ActionType::kPlay) {
          --lives;
        } else {
          ++tokens;
        }
      }
      drew_needed = true;
    } else {
      for (RefCard& c : hands[a.target]) {
        const bool color = a.type == ActionType::kHintColor;
        const bool match = color ? c.color == a.value : c.rank == a.value;
        std::set<int>& s = color ? c.colors : c.ranks;
        if (match) {
          s = {static_cast<int>(a.value)};
          c.hinted = true;
        } else {
          s.erase(a.value);
        }
      }
      --tokens;
    }
    bool emptied_now = false;
    if (drew_needed && !deck.empty()) {
      draw(player);
      emptied_now = deck.empty();
    }
    ++turns;
    player = 1 - player;
    if (score() == 25 || lives == 0) {
      over = true;
    } else if (emptied_now) {
      countdown = 2;
    } else if (countdown > 0) {
      if (--countdown == 0) over = true;
    }
  }
};

inline std::vector<Card> deck_of(const GameState& state) {
  return {state.deck.begin(), state.deck.begin() + state.deck_end};
}

}  // namespace hanabi_qd::testing
