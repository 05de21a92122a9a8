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

#include "hanabi_qd/descriptors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace hanabi_qd {

void BehaviorStats::add_playability(double p) {
  const double t = playability_sum + p;
  if (std::abs(playability_sum) >= std::abs(p))
    playability_carry += (playability_sum - t) + p;
  else
    playability_carry += (p - t) + playability_sum;
  playability_sum = t;
}

void BehaviorStats::merge(const BehaviorStats& other) {
  hint_opportunities += other.hint_opportunities;
  hints_given += other.hints_given;
  play_events += other.play_events;
  add_playability(other.playability_sum);
  playability_carry += other.playability_carry;
}

void accumulate(BehaviorStats& stats, const PlayerView& view, const Action& action, double playability) {
  if (view.info_tokens >= 1) {
    ++stats.hint_opportunities;
    if (action.is_hint()) ++stats.hints_given;
  }
  if (action.type == ActionType::kPlay) {
    ++stats.play_events;
    stats.add_playability(playability);
  }
}

void accumulate(BehaviorStats& stats, const PlayerView& view, const Action& action) {
  const double p = action.type == ActionType::kPlay ? playability_probability(view, action.slot()) : 0.0;
  accumulate(stats, view, action, p);
}

std::optional<BehaviorDescriptor> finalize(const BehaviorStats& stats) {
  if (stats.hint_opportunities == 0 || stats.play_events == 0) return std::nullopt;
  BehaviorDescriptor d;
  d.communicativeness = static_cast<double>(stats.hints_given) / static_cast<double>(stats.hint_opportunities);
  d.risk_aversion = std::clamp(stats.playability_total() / static_cast<double>(stats.play_events), 0.0, 1.0);
  return d;
}

int bin_of(double value) {
  int k = static_cast<int>(std::floor(value * kGridSize));
  k = std::clamp(k, 0, kGridSize - 1);
  // Boundaries are the doubles nearest k/20; correct any rounding in value * 20.
  while (k < kGridSize - 1 && value >= (k + 1) / 20.0) ++k;
  while (k > 0 && value < k / 20.0) --k;
  return k;
}

NicheCoord niche_of(const BehaviorDescriptor& d) { return {bin_of(d.communicativeness), bin_of(d.risk_aversion)}; }

int manhattan_distance(const NicheCoord& a, const NicheCoord& b) {
  return std::abs(a.ci - b.ci) + std::abs(a.ri - b.ri);
}

}  // namespace hanabi_qd
