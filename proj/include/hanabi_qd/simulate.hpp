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
#include <functional>

#include "hanabi_qd/agent.hpp"
#include "hanabi_qd/descriptors.hpp"
#include "hanabi_qd/game.hpp"
#include "hanabi_qd/trace.hpp"

namespace hanabi_qd {

struct GameResult {
  int score = 0;
  int turns = 0;
  TerminalReason reason = TerminalReason::kDeckExhausted;
  std::array<BehaviorStats, kNumPlayers> stats{};  // per seat
};

// Called with each pre-action view and the action chosen from it.
using ViewObserver = std::function<void(const PlayerView&, const Action&)>;

// Plays one game: seat 0 runs `first`, seat 1 runs `second`.
GameResult play_game(const Chromosome& first, const Chromosome& second, uint64_t seed,
                     TraceRecorder* recorder = nullptr, const ViewObserver& observer = {});

}  // namespace hanabi_qd
