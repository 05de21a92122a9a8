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

#include <optional>
#include <string>
#include <vector>

#include "hanabi_qd/game.hpp"
#include "json.hpp"

namespace hanabi_qd {

struct TurnSnapshot {
  int score = 0;
  int info_tokens = 0;
  int lives = 0;
  bool operator==(const TurnSnapshot&) const = default;
};

// One game record. Either `seed` or an explicit `deck` identifies the deal.
struct GameTrace {
  uint64_t seed = 0;
  std::optional<std::vector<Card>> deck;
  std::vector<Action> actions;
  std::vector<TurnSnapshot> snapshots;  // state after each action

  bool operator==(const GameTrace&) const = default;
};

class TraceRecorder {
 public:
  explicit TraceRecorder(uint64_t seed) { trace_.seed = seed; }
  void record(const Action& action, const GameState& after);
  const GameTrace& trace() const { return trace_; }

 private:
  GameTrace trace_;
};

// Re-deals and re-applies every action; throws GameError if an action is
// illegal or a snapshot disagrees with the replayed state.
GameState replay(const GameTrace& trace);

nlohmann::json to_json(const GameTrace& trace);
GameTrace trace_from_json(const nlohmann::json& j);

}  // namespace hanabi_qd
