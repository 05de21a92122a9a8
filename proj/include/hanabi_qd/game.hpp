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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hanabi_qd {

inline constexpr int kNumPlayers = 2;
inline constexpr int kNumColors = 5;
inline constexpr int kNumRanks = 5;
inline constexpr int kNumIdentities = kNumColors * kNumRanks;
inline constexpr int kHandSize = 5;
inline constexpr int kMaxInfoTokens = 8;
inline constexpr int kMaxLives = 3;
inline constexpr int kMaxDeckSize = 50;
inline constexpr int kMaxScore = kNumColors * kNumRanks;
inline constexpr uint8_t kAllColors = 0x1F;
inline constexpr uint8_t kAllRanks = 0x1F;

// Color order is fixed and used for every tie-break: B, R, Y, W, G.
enum class Color : uint8_t { kBlue = 0, kRed, kYellow, kWhite, kGreen };

char color_char(Color color);
Color color_from_char(char c);

struct Card {
  Color color = Color::kBlue;
  uint8_t rank = 1;  // 1..5

  // Dense identity index in [0, 25): color * 5 + (rank - 1).
  constexpr int identity() const { return static_cast<int>(color) * kNumRanks + rank - 1; }
  static constexpr Card from_identity(int id) {
    return Card{static_cast<Color>(id / kNumRanks), static_cast<uint8_t>(id % kNumRanks + 1)};
  }
  bool operator==(const Card&) const = default;
};

std::string to_string(const Card& card);  // e.g. "R3"
Card parse_card(const std::string& text);

// Copies of each identity in the full deck.
using Composition = std::array<uint8_t, kNumIdentities>;
using IdentityCounts = std::array<uint8_t, kNumIdentities>;

// Standard 50-card deck: per color three 1s, two each of 2/3/4, one 5.
const Composition& standard_composition();

// Grounded knowledge a player holds about one of its own slots. Hints are
// public, so the partner's knowledge is visible to both players.
struct SlotKnowledge {
  uint8_t colors = kAllColors;  // bit c set: color c still possible
  uint8_t ranks = kAllRanks;    // bit r-1 set: rank r still possible
  bool hinted = false;          // touched by at least one positive hint

  bool color_known() const { return (colors & (colors - 1)) == 0; }
  bool rank_known() const { return (ranks & (ranks - 1)) == 0; }
  bool operator==(const SlotKnowledge&) const = default;
};

// Ordered hand, slot 0 is the oldest card. Knowledge travels with its card.
struct Hand {
  std::array<Card, kHandSize> cards{};
  std::array<SlotKnowledge, kHandSize> knowledge{};
  uint8_t size = 0;

  std::span<const Card> occupied() const { return {cards.data(), size}; }
  void push(Card card);
  Card remove(int slot);
  bool operator==(const Hand&) const = default;
};

enum class ActionType : uint8_t { kPlay = 0, kDiscard, kHintColor, kHintRank };

struct Action {
  ActionType type = ActionType::kPlay;
  uint8_t target = 0;  // hint recipient; unused for play/discard
  uint8_t value = 0;   // slot for play/discard, color index or rank for hints

  static constexpr Action play(int slot) {
    return {ActionType::kPlay, 0, static_cast<uint8_t>(slot)};
  }
  static constexpr Action discard(int slot) {
    return {ActionType::kDiscard, 0, static_cast<uint8_t>(slot)};
  }
  static constexpr Action hint_color(int target, Color color) {
    return {ActionType::kHintColor, static_cast<uint8_t>(target), static_cast<uint8_t>(color)};
  }
  static constexpr Action hint_rank(int target, int rank) {
    return {ActionType::kHintRank, static_cast<uint8_t>(target), static_cast<uint8_t>(rank)};
  }

  bool is_hint() const { return type == ActionType::kHintColor || type == ActionType::kHintRank; }
  int slot() const { return value; }
  bool operator==(const Action&) const = default;
};

// Compact text form: "play 0", "discard 3", "hint 1 color R", "hint 1 rank 4".
std::string to_string(const Action& action);
Action parse_action(const std::string& text);

enum class TerminalReason : uint8_t { kVictory = 0, kLivesExhausted, kDeckExhausted };
std::string to_string(TerminalReason reason);

class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GameState {
  Composition composition{};
  std::array<Card, kMaxDeckSize> deck{};  // deck[next_draw] is the top card
  uint8_t deck_end = 0;
  uint8_t next_draw = 0;
  std::array<Hand, kNumPlayers> hands{};
  std::array<uint8_t, kNumColors> fireworks{};
  IdentityCounts discard{};
  int8_t info_tokens = kMaxInfoTokens;
  int8_t lives = kMaxLives;
  uint8_t current_player = 0;
  int8_t final_turns_remaining = -1;  // -1 until the last card is drawn
  std::optional<TerminalReason> terminal_reason;
  int turn = 0;

  int deck_size() const { return deck_end - next_draw; }
  int score() const;
  bool is_terminal() const { return terminal_reason.has_value(); }
  bool operator==(const GameState&) const = default;
};

// Shuffles the standard deck with `seed` and deals five cards to each player.
GameState new_game(uint64_t seed);

// Deals from an explicit deck order (index 0 = top). The first five cards go
// to player 0, the next five to player 1. The game's composition is the
// multiset of `deck`.
GameState new_game_from_deck(std::span<const Card> deck, int hand_size = kHandSize);

std::vector<Action> legal_actions(const GameState& state);

// Empty optional when legal; otherwise the violated rule.
std::optional<std::string> illegality(const GameState& state, const Action& action);
inline bool is_legal(const GameState& state, const Action& action) {
  return !illegality(state, action).has_value();
}

struct TurnOutcome {
  Action action;
  Card card{};           // card played or discarded
  bool misplay = false;  // play that cost a life
  bool drew = false;
  int cards_touched = 0;  // for hints
};

// Applies a legal action in place. Throws GameError on an illegal action or a
// finished game.
TurnOutcome apply_action(GameState& state, const Action& action);

// Player's observation: partner's hand face up, own hand reduced to knowledge.
struct PlayerView {
  uint8_t player = 0;
  uint8_t own_size = 0;
  std::array<SlotKnowledge, kHandSize> own_knowledge{};
  Hand partner{};
  std::array<uint8_t, kNumColors> fireworks{};
  IdentityCounts discard{};
  Composition composition{};
  // Copies not visible to this player: composition minus partner's hand,
  // discard pile and played fireworks.
  IdentityCounts unseen{};
  int8_t info_tokens = 0;
  int8_t lives = 0;
  uint8_t deck_size = 0;
  int8_t final_turns_remaining = -1;
  int turn = 0;

  int partner_id() const { return 1 - player; }
  int score() const;
  bool operator==(const PlayerView&) const = default;
};

PlayerView view_of(const GameState& state, int player);

// Legality test that needs only the acting player's view.
bool is_legal_from_view(const PlayerView& view, const Action& action);

}  // namespace hanabi_qd
