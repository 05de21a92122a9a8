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

#include "hanabi_qd/belief.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace hanabi_qd {
namespace {

void require_slot(const PlayerView& view, int slot) {
  if (slot < 0 || slot >= view.own_size)
    throw std::out_of_range("slot " + std::to_string(slot) + " is empty");
}

struct SlotCounts {
  int total = 0;
  int playable = 0;
  int dead = 0;
};

SlotCounts count_slot(const PlayerView& view, int slot, uint32_t playable, uint32_t dead) {
  SlotCounts out;
  uint32_t m = identity_mask(view.own_knowledge[slot]);
  while (m) {
    const int id = std::countr_zero(m);
    m &= m - 1;
    const int n = view.unseen[id];
    out.total += n;
    if (playable & (1u << id)) out.playable += n;
    if (dead & (1u << id)) out.dead += n;
  }
  return out;
}

}  // namespace

int CardDistribution::support() const {
  int n = 0;
  for (uint8_t c : counts) n += c > 0;
  return n;
}

uint32_t identity_mask(const SlotKnowledge& knowledge) {
  uint32_t mask = 0;
  for (int c = 0; c < kNumColors; ++c)
    if (knowledge.colors & (1u << c)) mask |= static_cast<uint32_t>(knowledge.ranks & kAllRanks) << (c * kNumRanks);
  return mask;
}

uint32_t playable_mask(const std::array<uint8_t, kNumColors>& fireworks) {
  uint32_t mask = 0;
  for (int c = 0; c < kNumColors; ++c)
    if (fireworks[c] < kNumRanks) mask |= 1u << (c * kNumRanks + fireworks[c]);
  return mask;
}

uint32_t dead_mask(const std::array<uint8_t, kNumColors>& fireworks, const IdentityCounts& discard,
                   const Composition& composition) {
  uint32_t mask = 0;
  for (int c = 0; c < kNumColors; ++c) {
    const int base = c * kNumRanks;
    for (int r = 1; r <= fireworks[c]; ++r) mask |= 1u << (base + r - 1);
    // First rank above the pile whose copies are all gone blocks everything above it.
    for (int r = fireworks[c] + 1; r <= kNumRanks; ++r) {
      if (discard[base + r - 1] >= composition[base + r - 1]) {
        for (int above = r + 1; above <= kNumRanks; ++above) mask |= 1u << (base + above - 1);
        break;
      }
    }
  }
  return mask;
}

CardDistribution possible_identities(const PlayerView& view, int slot) {
  require_slot(view, slot);
  CardDistribution dist;
  uint32_t m = identity_mask(view.own_knowledge[slot]);
  while (m) {
    const int id = std::countr_zero(m);
    m &= m - 1;
    dist.counts[id] = view.unseen[id];
    dist.total += view.unseen[id];
  }
  return dist;
}

Ratio playability_ratio(const PlayerView& view, int slot) {
  require_slot(view, slot);
  const SlotCounts c = count_slot(view, slot, playable_mask(view.fireworks), 0);
  return {c.playable, c.total};
}

Ratio uselessness_ratio(const PlayerView& view, int slot) {
  require_slot(view, slot);
  const SlotCounts c = count_slot(view, slot, 0, dead_mask(view.fireworks, view.discard, view.composition));
  return {c.dead, c.total};
}

double playability_probability(const PlayerView& view, int slot) { return playability_ratio(view, slot).value(); }

double uselessness_indicator(const PlayerView& view, int slot) { return uselessness_ratio(view, slot).value(); }

BeliefSummary summarize(const PlayerView& view) {
  BeliefSummary s;
  s.size = view.own_size;
  s.playable_ids = playable_mask(view.fireworks);
  s.dead_ids = dead_mask(view.fireworks, view.discard, view.composition);
  for (int slot = 0; slot < view.own_size; ++slot) {
    const SlotCounts c = count_slot(view, slot, s.playable_ids, s.dead_ids);
    s.playable[slot] = {c.playable, c.total};
    s.useless[slot] = {c.dead, c.total};
  }
  return s;
}

}  // namespace hanabi_qd
