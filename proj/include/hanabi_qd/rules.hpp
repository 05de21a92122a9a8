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
#include <string>
#include <string_view>

#include "hanabi_qd/belief.hpp"
#include "hanabi_qd/game.hpp"

namespace hanabi_qd {

// Rule catalog: 15 templates x 9 guards = 135 rules. Rule id is
// template_index * 9 + guard_index, both in the declaration order below.
enum class RuleTemplate : uint8_t {
  kPlaySafeCard = 0,
  kPlayProbablySafe00,
  kPlayProbablySafe40,
  kPlayProbablySafe60,
  kTellPartnerAboutPlayableCard,
  kTellPartnerAboutUselessCard,
  kTellMostInformative,
  kTellUnknownRank,
  kTellUnknownColor,
  kDiscardCertainlyUseless,
  kDiscardProbablyUseless60,
  kDiscardProbablyUseless80,
  kDiscardOldestUnhinted,
  kDiscardOldest,
  kDiscardRandom,
};

enum class RuleGuard : uint8_t {
  kAlways = 0,
  kTokensBelow2,
  kTokensBelow4,
  kTokensBelow6,
  kTokensAtLeast4,
  kLivesOne,
  kLivesAtLeast2,
  kDeckBelow10,
  kDeckAtLeast10,
};

inline constexpr int kNumTemplates = 15;
inline constexpr int kNumGuards = 9;
inline constexpr int kNumRules = kNumTemplates * kNumGuards;

struct Rule {
  int id = 0;
  RuleTemplate tmpl = RuleTemplate::kPlaySafeCard;
  RuleGuard guard = RuleGuard::kAlways;
  // Probability threshold in tenths for play/discard-by-probability
  // templates (PlaySafeCard and DiscardCertainlyUseless use 10); -1 otherwise.
  int threshold_tenths = -1;

  bool operator==(const Rule&) const = default;
};

using RuleCatalog = std::array<Rule, kNumRules>;

const RuleCatalog& catalog();
Rule make_rule(RuleTemplate tmpl, RuleGuard guard);
constexpr int rule_id(RuleTemplate tmpl, RuleGuard guard) {
  return static_cast<int>(tmpl) * kNumGuards + static_cast<int>(guard);
}

std::string_view template_name(RuleTemplate tmpl);
std::string_view guard_name(RuleGuard guard);

// "id,template,threshold,guard" header plus one row per rule.
std::string catalog_csv();
// Stable fingerprint of catalog_csv(); stored in archives.
std::string catalog_hash();

bool guard_holds(RuleGuard guard, const PlayerView& view);

// Per-view cache shared by every rule evaluated on the same turn.
class RuleContext {
 public:
  explicit RuleContext(const PlayerView& view) : view_(view) {}

  const PlayerView& view() const { return view_; }
  const BeliefSummary& beliefs() {
    if (!beliefs_) beliefs_ = summarize(view_);
    return *beliefs_;
  }
  uint64_t view_hash();

 private:
  const PlayerView& view_;
  std::optional<BeliefSummary> beliefs_;
  std::optional<uint64_t> hash_;
};

// Action the rule proposes on this view, or nothing if its guard or
// condition fails. Within a rule: lowest slot first. A hint aimed at one card
// names its rank if unknown, else its color; hint scans go colors B,R,Y,W,G
// then ranks ascending.
std::optional<Action> apply_rule(const Rule& rule, RuleContext& context);
std::optional<Action> apply_rule(const Rule& rule, const PlayerView& view);

// FNV-1a over the canonical byte encoding of a view.
uint64_t canonical_view_hash(const PlayerView& view);

}  // namespace hanabi_qd
