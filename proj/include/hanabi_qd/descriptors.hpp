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

#include <cstdint>
#include <optional>

#include "hanabi_qd/belief.hpp"
#include "hanabi_qd/game.hpp"

namespace hanabi_qd {

inline constexpr int kGridSize = 20;
inline constexpr int kNumNiches = kGridSize * kGridSize;

// Counts behind communicativeness (c) and risk aversion (r). Merged by
// summing, so per-game stats can be pooled over an evaluation.
struct BehaviorStats {
  uint64_t hint_opportunities = 0;  // turns with at least one token
  uint64_t hints_given = 0;         // hints on those turns
  uint64_t play_events = 0;
  double playability_sum = 0.0;
  double playability_carry = 0.0;  // Neumaier compensation term

  void add_playability(double p);
  void merge(const BehaviorStats& other);
  double playability_total() const { return playability_sum + playability_carry; }
};

// Records one decision. `playability` is the grounded probability of the
// played slot and is only read for plays.
void accumulate(BehaviorStats& stats, const PlayerView& view, const Action& action, double playability);
void accumulate(BehaviorStats& stats, const PlayerView& view, const Action& action);

struct BehaviorDescriptor {
  double communicativeness = 0.0;
  double risk_aversion = 0.0;
  bool operator==(const BehaviorDescriptor&) const = default;
};

// Absent when either denominator is zero.
std::optional<BehaviorDescriptor> finalize(const BehaviorStats& stats);

struct NicheCoord {
  int ci = 0;
  int ri = 0;

  int index() const { return ci * kGridSize + ri; }
  static NicheCoord from_index(int index) { return {index / kGridSize, index % kGridSize}; }
  double c_label() const { return ci / 20.0; }
  double r_label() const { return ri / 20.0; }
  bool operator==(const NicheCoord&) const = default;
};

// Bin k holds k/20 <= v < (k+1)/20; the last bin also holds 1.0.
int bin_of(double value);
NicheCoord niche_of(const BehaviorDescriptor& d);
int manhattan_distance(const NicheCoord& a, const NicheCoord& b);

}  // namespace hanabi_qd
