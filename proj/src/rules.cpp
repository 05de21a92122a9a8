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

#include "hanabi_qd/rules.hpp"

#include <bit>
#include <cstdio>
#include <sstream>

namespace hanabi_qd {
namespace {

constexpr std::string_view kTemplateNames[kNumTemplates] = {
    "PlaySafeCard",
    "PlayProbablySafe",
    "PlayProbablySafe",
    "PlayProbablySafe",
    "TellPartnerAboutPlayableCard",
    "TellPartnerAboutUselessCard",
    "TellMostInformative",
    "TellUnknownRank",
    "TellUnknownColor",
    "DiscardCertainlyUseless",
    "DiscardProbablyUseless",
    "DiscardProbablyUseless",
    "DiscardOldestUnhinted",
    "DiscardOldest",
    "DiscardRandom",
};

constexpr std::string_view kGuardNames[kNumGuards] = {
    "always", "tokens<2", "tokens<4", "tokens<6", "tokens>=4", "lives==1", "lives>=2", "deck<10", "deck>=10",
};

int threshold_for(RuleTemplate tmpl) {
  switch (tmpl) {
    case RuleTemplate::kPlaySafeCard:
    case RuleTemplate::kDiscardCertainlyUseless:
      return 10;
    case RuleTemplate::kPlayProbablySafe00:
      return 0;
    case RuleTemplate::kPlayProbablySafe40:
      return 4;
    case RuleTemplate::kPlayProbablySafe60:
    case RuleTemplate::kDiscardProbablyUseless60:
      return 6;
    case RuleTemplate::kDiscardProbablyUseless80:
      return 8;
    default:
      return -1;
  }
}

RuleCatalog build_catalog() {
  RuleCatalog rules;
  for (int t = 0; t < kNumTemplates; ++t)
    for (int g = 0; g < kNumGuards; ++g)
      rules[t * kNumGuards + g] = make_rule(static_cast<RuleTemplate>(t), static_cast<RuleGuard>(g));
  return rules;
}

constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr uint64_t kFnvPrime = 0x100000001b3ULL;

struct Fnv {
  uint64_t h = kFnvOffset;
  void byte(uint8_t b) {
    h ^= b;
    h *= kFnvPrime;
  }
};

// Slot with the largest ratio (lowest index on ties), if it clears the threshold.
std::optional<int> best_slot(const std::array<Ratio, kHandSize>& ratios, int size, int tenths) {
  int best = -1;
  for (int s = 0; s < size; ++s)
    if (best < 0 || ratios[best] < ratios[s]) best = s;
  if (best >= 0 && ratios[best].at_least_tenths(tenths)) return best;
  return std::nullopt;
}

// Hint revealing a card the partner does not fully know yet: rank first.
std::optional<Action> hint_for_slot(const PlayerView& view, int slot) {
  const SlotKnowledge& k = view.partner.knowledge[slot];
  const Card& card = view.partner.cards[slot];
  if (!k.rank_known()) return Action::hint_rank(view.partner_id(), card.rank);
  if (!k.color_known()) return Action::hint_color(view.partner_id(), card.color);
  return std::nullopt;
}

// Possibilities a hint removes across the partner's hand.
int information_gain(const Hand& hand, bool by_color, int value) {
  int gain = 0;
  for (int s = 0; s < hand.size; ++s) {
    const Card& card = hand.cards[s];
    const SlotKnowledge& k = hand.knowledge[s];
    const uint8_t mask = by_color ? k.colors : k.ranks;
    const uint8_t bit = static_cast<uint8_t>(1u << (by_color ? value : value - 1));
    const bool touched = by_color ? static_cast<int>(card.color) == value : card.rank == value;
    const uint8_t after = touched ? bit : static_cast<uint8_t>(mask & ~bit);
    gain += std::popcount(mask) - std::popcount(after);
  }
  return gain;
}

std::optional<Action> most_informative_hint(const PlayerView& view) {
  const Hand& hand = view.partner;
  uint8_t colors = 0, ranks = 0;
  for (const Card& card : hand.occupied()) {
    colors |= static_cast<uint8_t>(1u << static_cast<int>(card.color));
    ranks |= static_cast<uint8_t>(1u << (card.rank - 1));
  }
  std::optional<Action> best;
  int best_gain = 0;
  for (int c = 0; c < kNumColors; ++c) {
    if (!(colors & (1u << c))) continue;
    const int gain = information_gain(hand, true, c);
    if (gain > best_gain) {
      best_gain = gain;
      best = Action::hint_color(view.partner_id(), static_cast<Color>(c));
    }
  }
  for (int r = 1; r <= kNumRanks; ++r) {
    if (!(ranks & (1u << (r - 1)))) continue;
    const int gain = information_gain(hand, false, r);
    if (gain > best_gain) {
      best_gain = gain;
      best = Action::hint_rank(view.partner_id(), r);
    }
  }
  return best;
}

}  // namespace

Rule make_rule(RuleTemplate tmpl, RuleGuard guard) {
  return Rule{rule_id(tmpl, guard), tmpl, guard, threshold_for(tmpl)};
}

const RuleCatalog& catalog() {
  static const RuleCatalog rules = build_catalog();
  return rules;
}

std::string_view template_name(RuleTemplate tmpl) { return kTemplateNames[static_cast<int>(tmpl)]; }

std::string_view guard_name(RuleGuard guard) { return kGuardNames[static_cast<int>(guard)]; }

std::string catalog_csv() {
  std::ostringstream out;
  out << "id,template,threshold,guard\n";
  for (const Rule& rule : catalog()) {
    out << rule.id << ',' << template_name(rule.tmpl) << ',';
    if (rule.threshold_tenths >= 0) out << rule.threshold_tenths / 10 << '.' << rule.threshold_tenths % 10;
    out << ',' << guard_name(rule.guard) << '\n';
  }
  return out.str();
}

std::string catalog_hash() {
  Fnv fnv;
  for (char c : catalog_csv()) fnv.byte(static_cast<uint8_t>(c));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv.h));
  return buf;
}

bool guard_holds(RuleGuard guard, const PlayerView& view) {
  switch (guard) {
    case RuleGuard::kAlways:
      return true;
    case RuleGuard::kTokensBelow2:
      return view.info_tokens < 2;
    case RuleGuard::kTokensBelow4:
      return view.info_tokens < 4;
    case RuleGuard::kTokensBelow6:
      return view.info_tokens < 6;
    case RuleGuard::kTokensAtLeast4:
      return view.info_tokens >= 4;
    case RuleGuard::kLivesOne:
      return view.lives == 1;
    case RuleGuard::kLivesAtLeast2:
      return view.lives >= 2;
    case RuleGuard::kDeckBelow10:
      return view.deck_size < 10;
    case RuleGuard::kDeckAtLeast10:
      return view.deck_size >= 10;
  }
  return false;
}

uint64_t canonical_view_hash(const PlayerView& view) {
  Fnv fnv;
  fnv.byte(view.player);
  fnv.byte(view.own_size);
  for (int s = 0; s < view.own_size; ++s) {
    const SlotKnowledge& k = view.own_knowledge[s];
    fnv.byte(k.colors);
    fnv.byte(k.ranks);
    fnv.byte(k.hinted);
  }
  fnv.byte(view.partner.size);
  for (int s = 0; s < view.partner.size; ++s) {
    const SlotKnowledge& k = view.partner.knowledge[s];
    fnv.byte(static_cast<uint8_t>(view.partner.cards[s].identity()));
    fnv.byte(k.colors);
    fnv.byte(k.ranks);
    fnv.byte(k.hinted);
  }
  for (uint8_t f : view.fireworks) fnv.byte(f);
  for (uint8_t d : view.discard) fnv.byte(d);
  fnv.byte(static_cast<uint8_t>(view.info_tokens));
  fnv.byte(static_cast<uint8_t>(view.lives));
  fnv.byte(view.deck_size);
  fnv.byte(static_cast<uint8_t>(view.final_turns_remaining));
  for (int shift = 0; shift < 32; shift += 8) fnv.byte(static_cast<uint8_t>(view.turn >> shift));
  return fnv.h;
}

uint64_t RuleContext::view_hash() {
  if (!hash_) hash_ = canonical_view_hash(view_);
  return *hash_;
}

std::optional<Action> apply_rule(const Rule& rule, const PlayerView& view) {
  RuleContext context(view);
  return apply_rule(rule, context);
}

std::optional<Action> apply_rule(const Rule& rule, RuleContext& context) {
  const PlayerView& view = context.view();
  if (!guard_holds(rule.guard, view)) return std::nullopt;
  const bool can_hint = view.info_tokens > 0 && view.partner.size > 0;
  const bool can_discard = view.info_tokens < kMaxInfoTokens && view.own_size > 0;

  switch (rule.tmpl) {
    case RuleTemplate::kPlaySafeCard:
    case RuleTemplate::kPlayProbablySafe00:
    case RuleTemplate::kPlayProbablySafe40:
    case RuleTemplate::kPlayProbablySafe60: {
      const BeliefSummary& b = context.beliefs();
      if (auto slot = best_slot(b.playable, b.size, rule.threshold_tenths)) return Action::play(*slot);
      return std::nullopt;
    }

    case RuleTemplate::kTellPartnerAboutPlayableCard: {
      if (!can_hint) return std::nullopt;
      const uint32_t playable = playable_mask(view.fireworks);
      for (int s = 0; s < view.partner.size; ++s)
        if (playable & (1u << view.partner.cards[s].identity()))
          if (auto hint = hint_for_slot(view, s)) return hint;
      return std::nullopt;
    }

    case RuleTemplate::kTellPartnerAboutUselessCard: {
      if (!can_hint) return std::nullopt;
      const uint32_t dead = dead_mask(view.fireworks, view.discard, view.composition);
      for (int s = 0; s < view.partner.size; ++s)
        if (dead & (1u << view.partner.cards[s].identity()))
          if (auto hint = hint_for_slot(view, s)) return hint;
      return std::nullopt;
    }

    case RuleTemplate::kTellMostInformative:
      if (!can_hint) return std::nullopt;
      return most_informative_hint(view);

    case RuleTemplate::kTellUnknownRank:
      if (!can_hint) return std::nullopt;
      for (int s = 0; s < view.partner.size; ++s)
        if (!view.partner.knowledge[s].rank_known()) return Action::hint_rank(view.partner_id(), view.partner.cards[s].rank);
      return std::nullopt;

    case RuleTemplate::kTellUnknownColor:
      if (!can_hint) return std::nullopt;
      for (int s = 0; s < view.partner.size; ++s)
        if (!view.partner.knowledge[s].color_known())
          return Action::hint_color(view.partner_id(), view.partner.cards[s].color);
      return std::nullopt;

    case RuleTemplate::kDiscardCertainlyUseless:
    case RuleTemplate::kDiscardProbablyUseless60:
    case RuleTemplate::kDiscardProbablyUseless80: {
      if (!can_discard) return std::nullopt;
      const BeliefSummary& b = context.beliefs();
      if (auto slot = best_slot(b.useless, b.size, rule.threshold_tenths)) return Action::discard(*slot);
      return std::nullopt;
    }

    case RuleTemplate::kDiscardOldestUnhinted:
      if (!can_discard) return std::nullopt;
      for (int s = 0; s < view.own_size; ++s)
        if (!view.own_knowledge[s].hinted) return Action::discard(s);
      return std::nullopt;

    case RuleTemplate::kDiscardOldest:
      if (!can_discard) return std::nullopt;
      return Action::discard(0);

    case RuleTemplate::kDiscardRandom:
      if (!can_discard) return std::nullopt;
      return Action::discard(static_cast<int>(context.view_hash() % view.own_size));
  }
  return std::nullopt;
}

}  // namespace hanabi_qd
