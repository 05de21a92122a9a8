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

#include "hanabi_qd/simulate.hpp"

namespace hanabi_qd {

GameResult play_game(const Chromosome& first, const Chromosome& second, uint64_t seed, TraceRecorder* recorder,
                     const ViewObserver& observer) {
  GameState state = new_game(seed);
  GameResult result;
  const Chromosome* seats[kNumPlayers] = {&first, &second};
  while (!state.is_terminal()) {
    const int actor = state.current_player;
    const PlayerView view = view_of(state, actor);
    RuleContext context(view);
    const Action action = decide(*seats[actor], context);
    double playability = 0.0;
    if (action.type == ActionType::kPlay) playability = context.beliefs().playable[action.slot()].value();
    accumulate(result.stats[actor], view, action, playability);
    if (observer) observer(view, action);
    apply_action(state, action);
    if (recorder) recorder->record(action, state);
  }
  result.score = state.score();
  result.turns = state.turn;
  result.reason = *state.terminal_reason;
  return result;
}

}  // namespace hanabi_qd
