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

#include "hanabi_qd/game.hpp"

// Grounded card inference. A slot's candidates are the identities allowed by
// its hint knowledge, weighted by copies the player cannot see. Knowledge
// about the player's other slots is deliberately not used.
namespace hanabi_qd {

// Exact probability as an integer ratio; den > 0 for any occupied slot.
struct Ratio {
  int num = 0;
  int den = 1;

  double value() const { return static_cast<double>(num) / den; }
  bool is_zero() const { return num == 0; }
  bool is_one() const { return num == den; }
  // num/den >= tenths/10
  bool at_least_tenths(int tenths) const { return num * 10 >= tenths * den; }
  bool operator==(const Ratio& o) const { return num * o.den == o.num * den; }
  bool operator<(const Ratio& o) const { return num * o.den < o.num * den; }
};

struct CardDistribution {
  IdentityCounts counts{};
  int total = 0;

  int support() const;
};

// 25-bit set of identities allowed by the slot's knowledge.
uint32_t identity_mask(const SlotKnowledge& knowledge);
// Identities that would be playable right now.
uint32_t playable_mask(const std::array<uint8_t, kNumColors>& fireworks);
// Identities that can never be played: already played, or some lower rank of
// that color has every copy in the discard pile.
uint32_t dead_mask(const std::array<uint8_t, kNumColors>& fireworks, const IdentityCounts& discard,
                   const Composition& composition);

CardDistribution possible_identities(const PlayerView& view, int slot);
Ratio playability_ratio(const PlayerView& view, int slot);
Ratio uselessness_ratio(const PlayerView& view, int slot);
double playability_probability(const PlayerView& view, int slot);
double uselessness_indicator(const PlayerView& view, int slot);

// All own-slot ratios for one view, computed in one pass.
struct BeliefSummary {
  std::array<Ratio, kHandSize> playable{};
  std::array<Ratio, kHandSize> useless{};
  int size = 0;
  uint32_t playable_ids = 0;
  uint32_t dead_ids = 0;
};

BeliefSummary summarize(const PlayerView& view);

}  // namespace hanabi_qd
