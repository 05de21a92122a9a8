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

#include "hanabi_qd/game.hpp"

#include <numeric>
#include <sstream>

#include "hanabi_qd/rng.hpp"

namespace hanabi_qd {
namespace {

constexpr char kColorChars[kNumColors] = {'B', 'R', 'Y', 'W', 'G'};

Composition make_standard_composition() {
  constexpr uint8_t kCopiesByRank[kNumRanks] = {3, 2, 2, 2, 1};
  Composition comp{};
  for (int id = 0; id < kNumIdentities; ++id) comp[id] = kCopiesByRank[id % kNumRanks];
  return comp;
}

bool hint_touches(const Hand& hand, const Action& action) {
  for (const Card& card : hand.occupied()) {
    if (action.type == ActionType::kHintColor && static_cast<uint8_t>(card.color) == action.value)
      return true;
    if (action.type == ActionType::kHintRank && card.rank == action.value) return true;
  }
  return false;
}

std::optional<std::string> hint_illegality(int actor, int own_tokens, const Hand& target_hand,
                                           const Action& action) {
  if (action.target == actor || action.target >= kNumPlayers) return "hint target must be the partner";
  if (own_tokens <= 0) return "no information tokens left for a hint";
  if (action.type == ActionType::kHintColor && action.value >= kNumColors) return "unknown hint color";
  if (action.type == ActionType::kHintRank && (action.value < 1 || action.value > kNumRanks))
    return "hint rank out of range";
  if (!hint_touches(target_hand, action)) return "hint must touch at least one card";
  return std::nullopt;
}

}  // namespace

char color_char(Color color) { return kColorChars[static_cast<int>(color)]; }

Color color_from_char(char c) {
  for (int i = 0; i < kNumColors; ++i)
    if (kColorChars[i] == c) return static_cast<Color>(i);
  throw std::invalid_argument(std::string("unknown color '") + c + "'");
}

std::string to_string(const Card& card) {
  return std::string{color_char(card.color), static_cast<char>('0' + card.rank)};
}

Card parse_card(const std::string& text) {
  if (text.size() != 2 || text[1] < '1' || text[1] > '5')
    throw std::invalid_argument("bad card '" + text + "'");
  return Card{color_from_char(text[0]), static_cast<uint8_t>(text[1] - '0')};
}

const Composition& standard_composition() {
  static const Composition comp = make_standard_composition();
  return comp;
}

void Hand::push(Card card) {
  if (size >= kHandSize) throw GameError("hand is full");
  cards[size] = card;
  knowledge[size] = SlotKnowledge{};
  ++size;
}

Card Hand::remove(int slot) {
  const Card removed = cards[slot];
  for (int i = slot; i + 1 < size; ++i) {
    cards[i] = cards[i + 1];
    knowledge[i] = knowledge[i + 1];
  }
  --size;
  cards[size] = Card{};
  knowledge[size] = SlotKnowledge{};
  return removed;
}

std::string to_string(const Action& action) {
  switch (action.type) {
    case ActionType::kPlay:
      return "play " + std::to_string(action.value);
    case ActionType::kDiscard:
      return "discard " + std::to_string(action.value);
    case ActionType::kHintColor:
      return "hint " + std::to_string(action.target) + " color " +
             color_char(static_cast<Color>(action.value));
    case ActionType::kHintRank:
      return "hint " + std::to_string(action.target) + " rank " + std::to_string(action.value);
  }
  return "?";
}

Action parse_action(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  if (kind == "play" || kind == "discard") {
    int slot = -1;
    if (!(in >> slot) || slot < 0 || slot >= kHandSize)
      throw std::invalid_argument("bad slot in action '" + text + "'");
    return kind == "play" ? Action::play(slot) : Action::discard(slot);
  }
  if (kind == "hint") {
    int target = -1;
    std::string attr, value;
    if (!(in >> target >> attr >> value) || target < 0 || target >= kNumPlayers)
      throw std::invalid_argument("bad hint '" + text + "'");
    if (attr == "color" && value.size() == 1) return Action::hint_color(target, color_from_char(value[0]));
    if (attr == "rank" && value.size() == 1 && value[0] >= '1' && value[0] <= '5')
      return Action::hint_rank(target, value[0] - '0');
    throw std::invalid_argument("bad hint '" + text + "'");
  }
  throw std::invalid_argument("unknown action '" + text + "'");
}

std::string to_string(TerminalReason reason) {
  switch (reason) {
    case TerminalReason::kVictory:
      return "victory";
    case TerminalReason::kLivesExhausted:
      return "lives_exhausted";
    case TerminalReason::kDeckExhausted:
      return "deck_exhausted";
  }
  return "?";
}

int GameState::score() const { return std::accumulate(fireworks.begin(), fireworks.end(), 0); }

int PlayerView::score() const { return std::accumulate(fireworks.begin(), fireworks.end(), 0); }

GameState new_game_from_deck(std::span<const Card> deck, int hand_size) {
  if (deck.size() > static_cast<size_t>(kMaxDeckSize)) throw GameError("deck too large");
  if (hand_size < 1 || hand_size > kHandSize) throw GameError("hand size out of range");
  if (deck.size() < static_cast<size_t>(hand_size * kNumPlayers)) throw GameError("deck too small to deal");
  GameState state;
  for (size_t i = 0; i < deck.size(); ++i) {
    state.deck[i] = deck[i];
    ++state.composition[deck[i].identity()];
  }
  state.deck_end = static_cast<uint8_t>(deck.size());
  for (int p = 0; p < kNumPlayers; ++p)
    for (int i = 0; i < hand_size; ++i) state.hands[p].push(state.deck[state.next_draw++]);
  if (state.deck_size() == 0) state.final_turns_remaining = kNumPlayers;
  return state;
}

GameState new_game(uint64_t seed) {
  std::array<Card, kMaxDeckSize> deck;
  int n = 0;
  const Composition& comp = standard_composition();
  for (int id = 0; id < kNumIdentities; ++id)
    for (int k = 0; k < comp[id]; ++k) deck[n++] = Card::from_identity(id);
  Rng rng(seed);
  for (int i = n - 1; i > 0; --i) std::swap(deck[i], deck[rng.below(static_cast<uint32_t>(i + 1))]);
  return new_game_from_deck(std::span<const Card>(deck.data(), n));
}

std::optional<std::string> illegality(const GameState& state, const Action& action) {
  if (state.is_terminal()) return "game over";
  const int actor = state.current_player;
  const Hand& hand = state.hands[actor];
  switch (action.type) {
    case ActionType::kPlay:
      if (action.value >= hand.size) return "play slot is empty";
      return std::nullopt;
    case ActionType::kDiscard:
      if (action.value >= hand.size) return "discard slot is empty";
      if (state.info_tokens >= kMaxInfoTokens) return "cannot discard with all information tokens";
      return std::nullopt;
    case ActionType::kHintColor:
    case ActionType::kHintRank:
      return hint_illegality(actor, state.info_tokens, state.hands[action.target % kNumPlayers], action);
  }
  return "unknown action type";
}

std::vector<Action> legal_actions(const GameState& state) {
  if (state.is_terminal()) throw GameError("game over");
  std::vector<Action> actions;
  const int actor = state.current_player;
  const Hand& hand = state.hands[actor];
  for (int s = 0; s < hand.size; ++s) actions.push_back(Action::play(s));
  if (state.info_tokens < kMaxInfoTokens)
    for (int s = 0; s < hand.size; ++s) actions.push_back(Action::discard(s));
  if (state.info_tokens > 0) {
    const int partner = 1 - actor;
    const Hand& other = state.hands[partner];
    uint8_t colors = 0, ranks = 0;
    for (const Card& card : other.occupied()) {
      colors |= static_cast<uint8_t>(1u << static_cast<int>(card.color));
      ranks |= static_cast<uint8_t>(1u << (card.rank - 1));
    }
    for (int c = 0; c < kNumColors; ++c)
      if (colors & (1u << c)) actions.push_back(Action::hint_color(partner, static_cast<Color>(c)));
    for (int r = 1; r <= kNumRanks; ++r)
      if (ranks & (1u << (r - 1))) actions.push_back(Action::hint_rank(partner, r));
  }
  return actions;
}

TurnOutcome apply_action(GameState& state, const Action& action) {
  if (auto why = illegality(state, action)) throw GameError("illegal action '" + to_string(action) + "': " + *why);
  const int actor = state.current_player;
  Hand& hand = state.hands[actor];
  TurnOutcome outcome{action};
  bool draws = false;

  switch (action.type) {
    case ActionType::kPlay: {
      const Card card = hand.remove(action.value);
      outcome.card = card;
      uint8_t& pile = state.fireworks[static_cast<int>(card.color)];
      if (card.rank == pile + 1) {
        pile = card.rank;
        if (card.rank == kNumRanks && state.info_tokens < kMaxInfoTokens) ++state.info_tokens;
      } else {
        ++state.discard[card.identity()];
        --state.lives;
        outcome.misplay = true;
      }
      draws = true;
      break;
    }
    case ActionType::kDiscard: {
      const Card card = hand.remove(action.value);
      outcome.card = card;
      ++state.discard[card.identity()];
      ++state.info_tokens;
      draws = true;
      break;
    }
    case ActionType::kHintColor:
    case ActionType::kHintRank: {
      Hand& target = state.hands[action.target];
      const bool by_color = action.type == ActionType::kHintColor;
      const uint8_t bit = static_cast<uint8_t>(1u << (by_color ? action.value : action.value - 1));
      for (int s = 0; s < target.size; ++s) {
        const Card& card = target.cards[s];
        SlotKnowledge& k = target.knowledge[s];
        const bool touched = by_color ? static_cast<uint8_t>(card.color) == action.value : card.rank == action.value;
        uint8_t& mask = by_color ? k.colors : k.ranks;
        if (touched) {
          mask = bit;
          k.hinted = true;
          ++outcome.cards_touched;
        } else {
          mask = static_cast<uint8_t>(mask & ~bit);
        }
      }
      --state.info_tokens;
      break;
    }
  }

  bool deck_just_emptied = false;
  if (draws && state.deck_size() > 0) {
    hand.push(state.deck[state.next_draw++]);
    outcome.drew = true;
    deck_just_emptied = state.deck_size() == 0;
  }

  ++state.turn;
  state.current_player = static_cast<uint8_t>(1 - actor);

  if (state.score() == kMaxScore) {
    state.terminal_reason = TerminalReason::kVictory;
  } else if (state.lives <= 0) {
    state.terminal_reason = TerminalReason::kLivesExhausted;
  } else if (deck_just_emptied) {
    state.final_turns_remaining = kNumPlayers;
  } else if (state.final_turns_remaining > 0) {
    if (--state.final_turns_remaining == 0) state.terminal_reason = TerminalReason::kDeckExhausted;
  }
  return outcome;
}

PlayerView view_of(const GameState& state, int player) {
  PlayerView view;
  view.player = static_cast<uint8_t>(player);
  const Hand& own = state.hands[player];
  view.own_size = own.size;
  view.own_knowledge = own.knowledge;
  view.partner = state.hands[1 - player];
  view.fireworks = state.fireworks;
  view.discard = state.discard;
  view.composition = state.composition;
  view.info_tokens = state.info_tokens;
  view.lives = state.lives;
  view.deck_size = static_cast<uint8_t>(state.deck_size());
  view.final_turns_remaining = state.final_turns_remaining;
  view.turn = state.turn;

  IdentityCounts unseen = state.composition;
  for (int id = 0; id < kNumIdentities; ++id) unseen[id] = static_cast<uint8_t>(unseen[id] - state.discard[id]);
  for (const Card& card : view.partner.occupied()) --unseen[card.identity()];
  for (int c = 0; c < kNumColors; ++c)
    for (int r = 1; r <= state.fireworks[c]; ++r) --unseen[c * kNumRanks + r - 1];
  view.unseen = unseen;
  return view;
}

bool is_legal_from_view(const PlayerView& view, const Action& action) {
  switch (action.type) {
    case ActionType::kPlay:
      return action.value < view.own_size;
    case ActionType::kDiscard:
      return action.value < view.own_size && view.info_tokens < kMaxInfoTokens;
    case ActionType::kHintColor:
    case ActionType::kHintRank:
      return !hint_illegality(view.player, view.info_tokens, view.partner, action).has_value();
  }
  return false;
}

}  // namespace hanabi_qd
